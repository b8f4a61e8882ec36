#pragma once

#include <optional>
#include <vector>

#include "shifted/simplicial_complex.hpp"

namespace shifted {

/// A bijective relabeling of 1..n: labeling[v] is the label of vertex v
/// (slot 0 unused). Label 1 is the most dominant end: a shifted complex is
/// closed under swapping any face vertex for a smaller-labeled outside one.
using VertexLabeling = std::vector<VertexId>;

VertexLabeling identity_labeling(int n);

/// Componentwise order on vertex sets written as ascending strings, the
/// shorter side padded with leading zeros: {2,4} <= {1,3,5,6} via 0024 vs
/// 1356. Reflexive; any subset of y satisfies x <= y. A strictly larger set
/// is never <= a smaller one.
bool padded_less_or_equal(FaceSet x, FaceSet y);

/// True iff the faces of k are downward closed under padded_less_or_equal
/// over all subsets of {1..vertex_count}. Guard: vertex_count <= 16.
bool is_order_ideal(const SimplicialComplex& k);

/// True iff for every face F, every v in F and every w outside F with
/// labeling[w] < labeling[v], the set F - v + w is again a face.
/// Requires a bijective labeling covering 1..vertex_count.
/// Guard: vertex_count <= 25.
bool is_shifted_under(const SimplicialComplex& k, const VertexLabeling& labeling);

/// Searches for a labeling that witnesses shiftedness; std::nullopt when none
/// exists. Backtracking over label ranks, candidates ordered by decreasing
/// face-incidence degree, pruning on any violation among labeled vertices;
/// the result is re-verified with is_shifted_under before returning.
/// Guard: vertex_count <= 10.
std::optional<VertexLabeling> find_shifted_labeling(const SimplicialComplex& k);

/// K star_d v: adds v joined to every face of cardinality <= d (the empty
/// face included, so {v} always enters). Requires d >= 1 and v not a vertex
/// of any face of k; vertex_count grows to cover v.
SimplicialComplex star_d(const SimplicialComplex& k, VertexId v, int d);

/// The complex of all sets x <= some top under padded_less_or_equal,
/// on vertices 1..n. Guard: n <= 16.
SimplicialComplex padded_order_ideal(const std::vector<FaceSet>& tops, int n);

}  // namespace shifted
