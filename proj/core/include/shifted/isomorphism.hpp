#pragma once

#include "shifted/simplicial_complex.hpp"

namespace shifted {

/// Relabeling search: true iff some bijection of 1..n carries a's facets
/// onto b's. Vertices are matched only when their facet-size signatures
/// agree, which prunes most of the n! tree. Guard: n <= 9.
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace shifted
