#include "shifted/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace shifted {

namespace {

// Sorted sizes of the facets containing each vertex; ghosts get an empty
// signature and so can only map to ghosts.
std::vector<std::vector<int>> signatures(const SimplicialComplex& k) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(k.vertex_count()) + 1);
  for (FaceSet f : k.facets())
    for (VertexId v : f.vertices()) sig[static_cast<std::size_t>(v)].push_back(f.size());
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

struct IsoSearch {
  int n = 0;
  const std::vector<std::vector<int>>* sig_a = nullptr;
  const std::vector<std::vector<int>>* sig_b = nullptr;
  std::vector<std::uint64_t> a_facets;
  std::vector<std::uint64_t> b_sorted;
  std::vector<int> image;  // a-vertex -> b-vertex, 0 = unassigned
  std::uint64_t used = 0;

  bool match(int v) {
    if (v > n) {
      std::vector<std::uint64_t> mapped;
      mapped.reserve(a_facets.size());
      for (std::uint64_t f : a_facets) {
        std::uint64_t g = 0;
        for (std::uint64_t rem = f; rem; rem &= rem - 1) {
          int u = std::countr_zero(rem) + 1;
          g |= std::uint64_t{1} << (image[static_cast<std::size_t>(u)] - 1);
        }
        mapped.push_back(g);
      }
      std::sort(mapped.begin(), mapped.end());
      return mapped == b_sorted;
    }
    for (int w = 1; w <= n; ++w) {
      std::uint64_t wbit = std::uint64_t{1} << (w - 1);
      if (used & wbit) continue;
      if ((*sig_a)[static_cast<std::size_t>(v)] != (*sig_b)[static_cast<std::size_t>(w)])
        continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= wbit;
      if (match(v + 1)) return true;
      used &= ~wbit;
    }
    image[static_cast<std::size_t>(v)] = 0;
    return false;
  }
};

}  // namespace

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() > 9 || b.vertex_count() > 9)
    throw std::invalid_argument("isomorphism search is limited to 9 vertices");
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.facet_count() != b.facet_count()) return false;

  auto sa = signatures(a);
  auto sb = signatures(b);
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }

  IsoSearch s;
  s.n = a.vertex_count();
  s.sig_a = &sa;
  s.sig_b = &sb;
  for (FaceSet f : a.facets()) s.a_facets.push_back(f.mask());
  for (FaceSet f : b.facets()) s.b_sorted.push_back(f.mask());
  std::sort(s.b_sorted.begin(), s.b_sorted.end());
  s.image.assign(static_cast<std::size_t>(s.n) + 1, 0);
  return s.match(1);
}

}  // namespace shifted
