#pragma once

#include <cstdint>
#include <functional>

#include "shifted/ds_string.hpp"
#include "shifted/graph.hpp"
#include "shifted/simplicial_complex.hpp"

namespace shifted {

/// 2^C(n,2). Guard: n <= 7.
std::uint64_t graph_count(int n);

/// All labeled graphs on vertices 1..n, edge-mask ascending. Guard: n <= 7.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn);

/// The edge-mask subrange [first, last), for splitting work across threads.
void enumerate_graph_range(int n, std::uint64_t first, std::uint64_t last,
                           const std::function<void(const Graph&)>& fn);

/// Number of antichains of nonempty subsets of 1..n, the void complex
/// included; pure_only keeps those whose members share one cardinality.
/// Guard: n <= 6.
std::uint64_t complex_count(int n, bool pure_only);

/// All complexes on vertex set 1..n whose facet list is an antichain of
/// nonempty subsets, void first, then ascending by the sorted facet-mask
/// list. Guard: n <= 6.
void enumerate_complexes(int n, bool pure_only,
                         const std::function<void(const SimplicialComplex&)>& fn);

/// The subrange of enumerate_complexes whose smallest facet mask lies in
/// [first, last); the void complex belongs to the range containing 0.
void enumerate_complex_range(int n, std::uint64_t first, std::uint64_t last,
                             bool pure_only,
                             const std::function<void(const SimplicialComplex&)>& fn);

/// All parseable strings with exactly the given token count, in base-3
/// counting order (D before S before bar). Guard: tokens <= 12.
void enumerate_ds_strings(int tokens, const std::function<void(const DsString&)>& fn);

/// Number of one-star-per-dimension strings with the given vertex-token
/// count: 1, 3, 8, 21, 55, 144, ... via a(v) = 3a(v-1) - a(v-2), which the
/// enumerator below is tested against. Guard: v <= 20.
std::uint64_t one_star_count(int vertex_tokens);

/// All one-star-per-dimension strings with exactly the given number of
/// vertex tokens, ordered by segment count, then by D placement.
void enumerate_one_star_strings(int vertex_tokens,
                                const std::function<void(const DsString&)>& fn);

}  // namespace shifted
