#include "shifted/graph.hpp"

#include <bit>
#include <stdexcept>

namespace shifted {

Graph::Graph(int n) : n_(n) {
  if (n < 0)
    throw std::invalid_argument("vertex_count must be >= 0, got " + std::to_string(n));
  if (n > kMaxVertices)
    throw std::invalid_argument("vertex_count exceeds capacity " +
                                std::to_string(kMaxVertices) + ": " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) + 1, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 1 || v > n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n_));
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << (v - 1);
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (u - 1);
}

bool Graph::is_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> (v - 1)) & 1u;
}

FaceSet Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return FaceSet::from_mask(adj_[static_cast<std::size_t>(v)]);
}

FaceSet Graph::closed_neighborhood(VertexId v) const {
  return neighbors(v).with(v);
}

int Graph::degree(VertexId v) const { return neighbors(v).size(); }

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 1; u <= n_; ++u) {
    std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> u << u;
    for (std::uint64_t m = higher; m; m &= m - 1)
      out.emplace_back(u, std::countr_zero(m) + 1);
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexId v = 1; v <= n_; ++v)
    twice += static_cast<std::size_t>(std::popcount(adj_[static_cast<std::size_t>(v)]));
  return twice / 2;
}

std::string Graph::to_string() const {
  std::string s = "n=" + std::to_string(n_) + ":";
  auto es = edges();
  if (es.empty()) return s + " (no edges)";
  for (auto [u, v] : es)
    s += " " + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

int pair_index(VertexId u, VertexId v, int n) {
  if (u > v) std::swap(u, v);
  if (u < 1 || v > n || u == v)
    throw std::invalid_argument("bad vertex pair " + std::to_string(u) + "," +
                                std::to_string(v) + " for n=" + std::to_string(n));
  // Pairs (1,*) come first, then (2,*), ...
  int before = pair_count(n) - pair_count(n - (u - 1));
  return before + (v - u - 1);
}

std::pair<VertexId, VertexId> pair_from_index(int index, int n) {
  if (index < 0 || index >= pair_count(n))
    throw std::invalid_argument("pair index out of range: " + std::to_string(index));
  VertexId u = 1;
  while (index >= n - u) {
    index -= n - u;
    ++u;
  }
  return {u, u + 1 + index};
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  if (pair_count(n) > 63 || (pair_count(n) < 64 && mask >> pair_count(n)))
    throw std::invalid_argument("edge mask out of range for n=" + std::to_string(n));
  Graph g(n);
  for (std::uint64_t m = mask; m; m &= m - 1) {
    auto [u, v] = pair_from_index(std::countr_zero(m), n);
    g.add_edge(u, v);
  }
  return g;
}

std::uint64_t edge_mask_of(const Graph& g) {
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges())
    mask |= std::uint64_t{1} << pair_index(u, v, g.vertex_count());
  return mask;
}

SimplicialComplex edge_complex(const Graph& g) {
  int n = g.vertex_count();
  std::vector<FaceSet> facets;
  for (auto [u, v] : g.edges()) facets.push_back(FaceSet::of({u, v}));
  for (VertexId v = 1; v <= n; ++v)
    if (g.degree(v) == 0) facets.push_back(FaceSet::of({v}));
  if (n == 0) return SimplicialComplex::empty_face_only(0);
  return SimplicialComplex::from_facets(facets, n);
}

Graph one_skeleton(const SimplicialComplex& k) {
  Graph g(k.vertex_count());
  for (FaceSet f : k.facets()) {
    auto vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
  }
  return g;
}

}  // namespace shifted
