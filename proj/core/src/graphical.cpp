#include "shifted/graphical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace shifted {

namespace {

// Maximal cliques of the complement graph, i.e. maximal independent sets.
// Standard pivoting recursion on bit masks.
void maximal_independent_sets(std::uint64_t chosen, std::uint64_t candidates,
                              std::uint64_t excluded,
                              const std::vector<std::uint64_t>& co_adj,
                              std::vector<FaceSet>& out) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(FaceSet::from_mask(chosen));
    return;
  }
  std::uint64_t both = candidates | excluded;
  int pivot = std::countr_zero(both) + 1;
  int best = -1;
  for (std::uint64_t rem = both; rem; rem &= rem - 1) {
    int u = std::countr_zero(rem) + 1;
    int gain = std::popcount(candidates & co_adj[static_cast<std::size_t>(u)]);
    if (gain > best) {
      best = gain;
      pivot = u;
    }
  }
  std::uint64_t branch = candidates & ~co_adj[static_cast<std::size_t>(pivot)];
  for (std::uint64_t rem = branch; rem; rem &= rem - 1) {
    std::uint64_t vbit = rem & ~(rem - 1);
    int v = std::countr_zero(vbit) + 1;
    const std::uint64_t& nb = co_adj[static_cast<std::size_t>(v)];
    maximal_independent_sets(chosen | vbit, candidates & nb, excluded & nb, co_adj, out);
    candidates &= ~vbit;
    excluded |= vbit;
  }
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return SimplicialComplex::empty_face_only(0);
  std::vector<std::uint64_t> co_adj(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v)
    co_adj[static_cast<std::size_t>(v)] =
        full_mask(n) & ~g.neighbor_mask(v) & ~(std::uint64_t{1} << (v - 1));
  std::vector<FaceSet> facets;
  maximal_independent_sets(0, full_mask(n), 0, co_adj, facets);
  return SimplicialComplex::from_antichain(std::move(facets), n);
}

SimplicialComplex gen_independence_complex(const SimplicialComplex& k) {
  int n = k.vertex_count();
  if (n > 25)
    throw std::invalid_argument("generalized independence is limited to 25 vertices, got " +
                                std::to_string(n));
  if (k.is_void()) {
    return SimplicialComplex::from_antichain({FaceSet::from_mask(full_mask(n))}, n);
  }
  const std::uint64_t top = std::uint64_t{1} << n;
  // covers[m] = m contains some facet of k; downward-closed complement.
  std::vector<char> covers(static_cast<std::size_t>(top), 0);
  for (FaceSet f : k.facets()) covers[static_cast<std::size_t>(f.mask())] = 1;
  for (std::uint64_t m = 0; m < top; ++m) {
    if (covers[static_cast<std::size_t>(m)]) continue;
    for (std::uint64_t rem = m; rem; rem &= rem - 1) {
      if (covers[static_cast<std::size_t>(m ^ (rem & ~(rem - 1)))]) {
        covers[static_cast<std::size_t>(m)] = 1;
        break;
      }
    }
  }
  std::vector<FaceSet> facets;
  for (std::uint64_t m = 0; m < top; ++m) {
    if (covers[static_cast<std::size_t>(m)]) continue;
    bool maximal = true;
    for (std::uint64_t out = full_mask(n) & ~m; out && maximal; out &= out - 1)
      maximal = covers[static_cast<std::size_t>(m | (out & ~(out - 1)))];
    if (maximal) facets.push_back(FaceSet::from_mask(m));
  }
  if (facets.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_antichain(std::move(facets), n);
}

SimplicialComplex dominance_complex(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20)
    throw std::invalid_argument("dominance complex is limited to 20 vertices, got " +
                                std::to_string(n));
  if (n == 0) return SimplicialComplex::void_complex(0);
  const std::uint64_t top = std::uint64_t{1} << n;
  const std::uint64_t all = full_mask(n);
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(top), 0);
  std::vector<char> dominating(static_cast<std::size_t>(top), 0);
  for (std::uint64_t d = 1; d < top; ++d) {
    std::uint64_t low = d & ~(d - 1);
    covered[static_cast<std::size_t>(d)] =
        covered[static_cast<std::size_t>(d ^ low)] |
        g.closed_neighborhood(std::countr_zero(low) + 1).mask();
    dominating[static_cast<std::size_t>(d)] = covered[static_cast<std::size_t>(d)] == all;
  }
  std::vector<FaceSet> facets;
  for (std::uint64_t d = 1; d < top; ++d) {
    if (!dominating[static_cast<std::size_t>(d)]) continue;
    bool minimal = true;
    for (std::uint64_t rem = d; rem && minimal; rem &= rem - 1)
      minimal = !dominating[static_cast<std::size_t>(d ^ (rem & ~(rem - 1)))];
    if (minimal) facets.push_back(FaceSet::from_mask(all & ~d));
  }
  return SimplicialComplex::from_antichain(std::move(facets), n);
}

SimplicialComplex neighborhood_complex(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return SimplicialComplex::void_complex(0);
  std::vector<FaceSet> hoods;
  hoods.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) hoods.push_back(g.neighbors(v));
  return SimplicialComplex::from_facets(hoods, n);
}

SimplicialComplex closed_neighborhood_complex(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return SimplicialComplex::void_complex(0);
  std::vector<FaceSet> hoods;
  hoods.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) hoods.push_back(g.closed_neighborhood(v));
  std::vector<FaceSet> minimal;
  for (FaceSet f : hoods) {
    bool keep = true;
    for (FaceSet other : hoods)
      if (other != f && other.subset_of(f)) {
        keep = false;
        break;
      }
    if (keep && std::find(minimal.begin(), minimal.end(), f) == minimal.end())
      minimal.push_back(f);
  }
  return SimplicialComplex::from_antichain(std::move(minimal), n);
}

bool is_flag(const SimplicialComplex& k) {
  for (FaceSet f : k.minimal_nonfaces())
    if (f.size() != 2) return false;
  return true;
}

namespace {

struct ColorSearch {
  std::vector<std::uint64_t> adj;  // 1-skeleton among support vertices
  std::vector<int> order;          // support, by decreasing skeleton degree
  std::vector<int> color;          // by vertex, -1 = unassigned
  int colors = 0;

  bool assign(std::size_t i) {
    if (i == order.size()) return true;
    int v = order[i];
    for (int c = 0; c < colors; ++c) {
      bool clash = false;
      for (std::uint64_t rem = adj[static_cast<std::size_t>(v)]; rem && !clash;
           rem &= rem - 1)
        clash = color[static_cast<std::size_t>(std::countr_zero(rem) + 1)] == c;
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (assign(i + 1)) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<BalancedColoring> find_balanced_coloring(const SimplicialComplex& k) {
  int n = k.vertex_count();
  if (n > 12)
    throw std::invalid_argument("balanced coloring search is limited to 12 vertices, got " +
                                std::to_string(n));
  ColorSearch s;
  s.colors = k.dimension() + 1;
  s.adj.assign(static_cast<std::size_t>(n) + 1, 0);
  for (FaceSet f : k.facets())
    for (VertexId u : f.vertices())
      s.adj[static_cast<std::size_t>(u)] |= f.mask() & ~(std::uint64_t{1} << (u - 1));
  s.color.assign(static_cast<std::size_t>(n) + 1, -1);

  FaceSet support = k.support();
  for (VertexId v : support.vertices()) s.order.push_back(v);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return std::popcount(s.adj[static_cast<std::size_t>(a)]) >
           std::popcount(s.adj[static_cast<std::size_t>(b)]);
  });

  if (!s.assign(0)) return std::nullopt;
  return s.color;
}

bool is_pencil(const SimplicialComplex& k) {
  if (!k.is_pure()) return false;
  int d = k.dimension();
  if (static_cast<long long>(k.facet_count()) !=
      static_cast<long long>(k.vertex_count()) - d)
    return false;
  FaceSet common = k.facets().front();
  for (FaceSet f : k.facets()) common = common.intersected(f);
  return common.size() >= d;
}

}  // namespace shifted
