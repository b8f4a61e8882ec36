#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shifted/face_set.hpp"
#include "shifted/simplicial_complex.hpp"

namespace shifted {

/// A finite simple undirected graph on vertices 1..vertex_count,
/// held as per-vertex neighbor masks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  int vertex_count() const { return n_; }

  /// Throws on loops or labels outside 1..n. Adding twice is harmless.
  void add_edge(VertexId u, VertexId v);

  bool is_edge(VertexId u, VertexId v) const;
  FaceSet neighbors(VertexId v) const;
  FaceSet closed_neighborhood(VertexId v) const;
  int degree(VertexId v) const;

  std::uint64_t neighbor_mask(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  /// "n=4: 12 23 34" (diagnostics and witness encodings).
  std::string to_string() const;

 private:
  void check_vertex(VertexId v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;  // adj_[v] for v in 1..n_; slot 0 unused
};

/// Number of unordered vertex pairs of an n-vertex graph.
inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Fixed pair numbering used by edge-mask graph encodings:
/// (1,2) (1,3) ... (1,n) (2,3) ... in lexicographic order.
int pair_index(VertexId u, VertexId v, int n);
std::pair<VertexId, VertexId> pair_from_index(int index, int n);

/// Graph from an edge mask over the fixed pair numbering.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);

/// The 1-dimensional complex of a graph: each edge is a facet and each
/// isolated vertex a singleton facet, so every vertex of g is a face.
SimplicialComplex edge_complex(const Graph& g);

/// The graph whose edges are the 1-dimensional faces of k.
Graph one_skeleton(const SimplicialComplex& k);

}  // namespace shifted
