#pragma once

#include <optional>
#include <vector>

#include "shifted/graph.hpp"
#include "shifted/simplicial_complex.hpp"

namespace shifted {

/// Faces = independent vertex sets of g; facets = maximal independent sets.
/// Isolated vertices lie in every facet.
SimplicialComplex independence_complex(const Graph& g);

/// The complex whose faces are the subsets of 1..n containing no facet of
/// k, making k's facets the minimal non-faces. A void k (nothing to avoid)
/// gives the full simplex; k with only the empty face gives the void
/// complex. Guard: n <= 25.
SimplicialComplex gen_independence_complex(const SimplicialComplex& k);

/// Faces = complements of dominating sets; facets = complements of the
/// minimal dominating sets. Guard: n <= 20. The 0-vertex graph maps to the
/// void complex.
SimplicialComplex dominance_complex(const Graph& g);

/// Faces = vertex sets whose members share a common neighbor, so facets
/// are the maximal open neighborhoods N(v). Edgeless graphs give the
/// complex with only the empty face; the 0-vertex graph gives void.
SimplicialComplex neighborhood_complex(const Graph& g);

/// Facets = the inclusion-minimal closed neighborhoods N[v]. Note minimal,
/// not maximal: a vertex whose closed neighborhood strictly contains
/// another's contributes no facet. The 0-vertex graph gives void.
SimplicialComplex closed_neighborhood_complex(const Graph& g);

/// True iff every minimal non-face has exactly two elements. Read over the
/// full vertex set 1..n: a vertex lying in no facet is a singleton minimal
/// non-face and disqualifies. Guard as minimal_nonfaces.
bool is_flag(const SimplicialComplex& k);

/// Vertex -> color, indexed by vertex id with slot 0 unused; -1 marks a
/// vertex lying in no face (unconstrained).
using BalancedColoring = std::vector<int>;

/// Searches for a coloring of the support with dim+1 colors such that
/// within any face all vertices get different colors. Since every pair of
/// vertices in a face spans an edge of the 1-skeleton, this is exactly a
/// proper coloring of the 1-skeleton, found by backtracking.
/// Guard: n <= 12.
std::optional<BalancedColoring> find_balanced_coloring(const SimplicialComplex& k);

/// A pure complex of n - d facets all sharing a common (d-1)-face, d its
/// dimension. A single simplex counts (one facet, shared face = itself).
bool is_pencil(const SimplicialComplex& k);

}  // namespace shifted
