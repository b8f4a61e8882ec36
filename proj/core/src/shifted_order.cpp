#include "shifted/shifted_order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace shifted {

namespace {

void check_guard(int n, int limit, const char* what) {
  if (n > limit)
    throw std::invalid_argument(std::string(what) + " is limited to " +
                                std::to_string(limit) + " vertices, got " + std::to_string(n));
}

void check_labeling(const VertexLabeling& labeling, int n) {
  if (static_cast<int>(labeling.size()) != n + 1)
    throw std::invalid_argument("labeling must have one entry per vertex 1..n");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (VertexId v = 1; v <= n; ++v) {
    VertexId l = labeling[static_cast<std::size_t>(v)];
    if (l < 1 || l > n || seen[static_cast<std::size_t>(l)])
      throw std::invalid_argument("labeling is not a bijection onto 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(l)] = true;
  }
}

}  // namespace

VertexLabeling identity_labeling(int n) {
  VertexLabeling l(static_cast<std::size_t>(n) + 1);
  std::iota(l.begin(), l.end(), 0);
  return l;
}

bool padded_less_or_equal(FaceSet x, FaceSet y) {
  if (x.size() > y.size()) return false;
  auto xs = x.vertices();
  auto ys = y.vertices();
  std::size_t offset = ys.size() - xs.size();
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] > ys[i + offset]) return false;
  return true;
}

bool is_order_ideal(const SimplicialComplex& k) {
  int n = k.vertex_count();
  check_guard(n, 16, "order ideal check");
  FaceTable table(k);
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t y = 0; y < top; ++y) {
    if (!table.is_face(y)) continue;
    FaceSet fy = FaceSet::from_mask(y);
    for (std::uint64_t x = 0; x < top; ++x)
      if (!table.is_face(x) && padded_less_or_equal(FaceSet::from_mask(x), fy)) return false;
  }
  return true;
}

bool is_shifted_under(const SimplicialComplex& k, const VertexLabeling& labeling) {
  int n = k.vertex_count();
  check_labeling(labeling, n);
  // Relabel so the condition reads on plain integer order.
  std::vector<FaceSet> relabeled;
  relabeled.reserve(k.facet_count());
  for (FaceSet f : k.facets()) {
    FaceSet g;
    for (VertexId v : f.vertices()) g = g.with(labeling[static_cast<std::size_t>(v)]);
    relabeled.push_back(g);
  }
  SimplicialComplex kk = SimplicialComplex::from_antichain(std::move(relabeled), std::max(n, 1));
  FaceTable table(kk);
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t f = 0; f < top; ++f) {
    if (!table.is_face(f)) continue;
    for (std::uint64_t vm = f; vm; vm &= vm - 1) {
      int v = std::countr_zero(vm);  // 0-based
      // Candidate replacements: absent vertices below v.
      std::uint64_t smaller_out = ~f & ((std::uint64_t{1} << v) - 1);
      for (std::uint64_t wm = smaller_out; wm; wm &= wm - 1) {
        int w = std::countr_zero(wm);
        if (!table.is_face((f ^ (std::uint64_t{1} << v)) | (std::uint64_t{1} << w)))
          return false;
      }
    }
  }
  return true;
}

namespace {

struct LabelSearch {
  int n = 0;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> faces_of;          // per vertex (0-based): faces containing it
  std::vector<std::uint64_t> face_list;         // all face masks
  std::vector<std::uint64_t> table;             // 2^n bit membership
  std::vector<int> order;                       // vertices, by decreasing face degree
  std::vector<int> chosen;                      // ranks -> vertex (0-based)
  std::uint64_t used = 0;

  bool is_face(std::uint64_t m) const { return (table[m >> 6] >> (m & 63)) & 1u; }

  // Vertex u is about to get the next (largest so far) label. Every already
  // labeled vertex w is smaller, so each face F with u in F, w not in F must
  // keep F - u + w a face. Constraints among labeled vertices are final,
  // which makes this a sound prune.
  bool consistent(int u) const {
    std::uint64_t ubit = std::uint64_t{1} << u;
    for (std::uint64_t f : face_list) {
      if (!(f & ubit)) continue;
      std::uint64_t candidates = used & ~f;
      for (std::uint64_t wm = candidates; wm; wm &= wm - 1) {
        std::uint64_t wbit = wm & ~(wm - 1);
        if (!is_face((f ^ ubit) | wbit)) return false;
      }
    }
    return true;
  }

  bool assign(int rank) {
    if (rank == n) return true;
    for (int u : order) {
      std::uint64_t ubit = std::uint64_t{1} << u;
      if (used & ubit) continue;
      if (consistent(u)) {
        chosen.push_back(u);
        used |= ubit;
        if (assign(rank + 1)) return true;
        used &= ~ubit;
        chosen.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<VertexLabeling> find_shifted_labeling(const SimplicialComplex& k) {
  int n = k.vertex_count();
  check_guard(n, 10, "shifted labeling search");
  if (n == 0) return VertexLabeling{0};

  LabelSearch s;
  s.n = n;
  s.all = full_mask(n);
  FaceTable table(k);
  const std::uint64_t top = std::uint64_t{1} << n;
  s.table.assign(static_cast<std::size_t>((top + 63) / 64), 0);
  s.faces_of.assign(static_cast<std::size_t>(n), 0);
  for (std::uint64_t m = 0; m < top; ++m) {
    if (!table.is_face(m)) continue;
    s.table[m >> 6] |= std::uint64_t{1} << (m & 63);
    s.face_list.push_back(m);
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (std::uint64_t m : s.face_list)
    for (std::uint64_t rem = m; rem; rem &= rem - 1)
      ++degree[static_cast<std::size_t>(std::countr_zero(rem))];
  s.order.resize(static_cast<std::size_t>(n));
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return degree[static_cast<std::size_t>(a)] >
                                              degree[static_cast<std::size_t>(b)]; });

  if (!s.assign(0)) return std::nullopt;

  VertexLabeling labeling(static_cast<std::size_t>(n) + 1, 0);
  for (int rank = 0; rank < n; ++rank)
    labeling[static_cast<std::size_t>(s.chosen[static_cast<std::size_t>(rank)]) + 1] = rank + 1;
  if (!is_shifted_under(k, labeling))
    throw std::logic_error("shifted labeling search produced an invalid witness");
  return labeling;
}

SimplicialComplex star_d(const SimplicialComplex& k, VertexId v, int d) {
  if (d < 1) throw std::invalid_argument("star dimension must be >= 1, got " + std::to_string(d));
  if (k.support().contains(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " is already a vertex of the complex");
  int n = std::max(k.vertex_count(), v);
  if (v < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex label out of range: " + std::to_string(v));

  // Collect faces of cardinality <= d, then join v to each of them.
  std::vector<std::uint64_t> small_faces;
  for (FaceSet f : k.facets()) {
    auto vs = f.vertices();
    int limit = std::min<int>(d, static_cast<int>(vs.size()));
    // All subsets of f of size <= limit, choosing vertices in ascending order.
    small_faces.push_back(0);
    std::vector<std::pair<std::uint64_t, std::size_t>> frames{{0, 0}};
    while (!frames.empty()) {
      auto [cur, idx] = frames.back();
      frames.pop_back();
      if (std::popcount(cur) == limit) continue;
      for (std::size_t i = idx; i < vs.size(); ++i) {
        std::uint64_t nxt = cur | (std::uint64_t{1} << (vs[i] - 1));
        small_faces.push_back(nxt);
        frames.emplace_back(nxt, i + 1);
      }
    }
  }
  std::sort(small_faces.begin(), small_faces.end());
  small_faces.erase(std::unique(small_faces.begin(), small_faces.end()), small_faces.end());

  std::vector<FaceSet> candidates;
  if (!k.is_void()) candidates.assign(k.facets().begin(), k.facets().end());
  std::uint64_t vbit = std::uint64_t{1} << (v - 1);
  for (std::uint64_t m : small_faces) candidates.push_back(FaceSet::from_mask(m | vbit));
  if (k.is_void() && small_faces.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_facets(candidates, n);
}

SimplicialComplex padded_order_ideal(const std::vector<FaceSet>& tops, int n) {
  check_guard(n, 16, "padded order ideal");
  if (n < 1) throw std::invalid_argument("padded_order_ideal needs n >= 1");
  FaceSet ground = FaceSet::from_mask(full_mask(n));
  for (FaceSet t : tops)
    if (!t.subset_of(ground))
      throw std::invalid_argument("top face " + t.to_string() + " has a vertex above n");
  std::vector<FaceSet> faces;
  const std::uint64_t top_mask = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < top_mask; ++m) {
    FaceSet x = FaceSet::from_mask(m);
    for (FaceSet t : tops) {
      if (padded_less_or_equal(x, t)) {
        faces.push_back(x);
        break;
      }
    }
  }
  if (faces.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_facets(faces, n);
}

}  // namespace shifted
