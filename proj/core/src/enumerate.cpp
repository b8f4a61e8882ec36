#include "shifted/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace shifted {

namespace {

void check_graph_guard(int n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("graph enumeration is limited to 7 vertices, got " +
                                std::to_string(n));
}

void check_complex_guard(int n) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("complex enumeration is limited to 6 vertices, got " +
                                std::to_string(n));
}

}  // namespace

std::uint64_t graph_count(int n) {
  check_graph_guard(n);
  return std::uint64_t{1} << pair_count(n);
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn) {
  enumerate_graph_range(n, 0, graph_count(n), fn);
}

void enumerate_graph_range(int n, std::uint64_t first, std::uint64_t last,
                           const std::function<void(const Graph&)>& fn) {
  check_graph_guard(n);
  last = std::min(last, graph_count(n));
  for (std::uint64_t mask = first; mask < last; ++mask)
    fn(graph_from_edge_mask(n, mask));
}

namespace {

// DFS over antichains of nonempty subset masks, chosen ascending. A later
// mask can only contain an earlier one, so incomparability is the single
// test (earlier & ~later) != 0. In pure mode all members share the first
// member's popcount, which makes them incomparable for free.
struct AntichainWalk {
  std::uint64_t top = 0;
  bool pure = false;
  std::vector<std::uint64_t> chosen;

  template <typename Visit>
  void extend(std::uint64_t next, const Visit& visit) {
    for (std::uint64_t m = next; m < top; ++m) {
      if (!admits(m)) continue;
      chosen.push_back(m);
      visit(chosen);
      extend(m + 1, visit);
      chosen.pop_back();
    }
  }

  bool admits(std::uint64_t m) const {
    if (chosen.empty()) return true;
    if (pure) return std::popcount(m) == std::popcount(chosen.front());
    for (std::uint64_t c : chosen)
      if ((c & ~m) == 0) return false;
    return true;
  }
};

}  // namespace

std::uint64_t complex_count(int n, bool pure_only) {
  check_complex_guard(n);
  std::uint64_t count = 1;  // the void complex
  AntichainWalk walk;
  walk.top = std::uint64_t{1} << n;
  walk.pure = pure_only;
  walk.extend(1, [&](const std::vector<std::uint64_t>&) { ++count; });
  return count;
}

void enumerate_complex_range(int n, std::uint64_t first, std::uint64_t last,
                             bool pure_only,
                             const std::function<void(const SimplicialComplex&)>& fn) {
  check_complex_guard(n);
  const std::uint64_t top = std::uint64_t{1} << n;
  last = std::min(last, top);
  if (first == 0) {
    fn(SimplicialComplex::void_complex(n));
    first = 1;
  }
  AntichainWalk walk;
  walk.top = top;
  walk.pure = pure_only;
  auto emit = [&](const std::vector<std::uint64_t>& masks) {
    std::vector<FaceSet> facets;
    facets.reserve(masks.size());
    for (std::uint64_t m : masks) facets.push_back(FaceSet::from_mask(m));
    fn(SimplicialComplex::from_antichain(std::move(facets), n));
  };
  for (std::uint64_t head = first; head < last; ++head) {
    walk.chosen.assign(1, head);
    emit(walk.chosen);
    walk.extend(head + 1, emit);
  }
}

void enumerate_complexes(int n, bool pure_only,
                         const std::function<void(const SimplicialComplex&)>& fn) {
  check_complex_guard(n);
  enumerate_complex_range(n, 0, std::uint64_t{1} << n, pure_only, fn);
}

void enumerate_ds_strings(int tokens, const std::function<void(const DsString&)>& fn) {
  if (tokens < 0 || tokens > 12)
    throw std::invalid_argument("string enumeration is limited to 12 tokens, got " +
                                std::to_string(tokens));
  if (tokens == 0) return;
  DsString s;
  s.tokens.assign(static_cast<std::size_t>(tokens), DsToken::Disjoint);
  // Base-3 odometer over token values D < S < bar.
  while (true) {
    bool star_follows = false;
    bool valid = true;
    for (auto it = s.tokens.rbegin(); it != s.tokens.rend(); ++it) {
      if (*it == DsToken::Star) star_follows = true;
      else if (*it == DsToken::Bar && !star_follows) {
        valid = false;
        break;
      }
    }
    if (valid) fn(s);
    int i = tokens - 1;
    while (i >= 0 && s.tokens[static_cast<std::size_t>(i)] == DsToken::Bar) {
      s.tokens[static_cast<std::size_t>(i)] = DsToken::Disjoint;
      --i;
    }
    if (i < 0) return;
    auto& t = s.tokens[static_cast<std::size_t>(i)];
    t = t == DsToken::Disjoint ? DsToken::Star : DsToken::Bar;
  }
}

std::uint64_t one_star_count(int vertex_tokens) {
  if (vertex_tokens < 0 || vertex_tokens > 20)
    throw std::invalid_argument("one-star counting is limited to 20 vertex tokens");
  std::uint64_t prev = 0, cur = 1;  // a(0), a(1)
  if (vertex_tokens == 0) return 0;
  for (int v = 1; v < vertex_tokens; ++v) {
    std::uint64_t next = 3 * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Segments are S with disjoint vertices packed around the stars: fill the
// 2t slots (before/after each of the t stars) with the leftover D's.
void one_star_rec(int slot, int slots, int remaining, std::vector<int>& fill,
                  const std::function<void(const DsString&)>& fn) {
  if (slot == slots) {
    if (remaining != 0) return;
    DsString s;
    for (int i = 0; i < slots; i += 2) {
      if (i > 0) s.tokens.push_back(DsToken::Bar);
      for (int d = 0; d < fill[static_cast<std::size_t>(i)]; ++d)
        s.tokens.push_back(DsToken::Disjoint);
      s.tokens.push_back(DsToken::Star);
      for (int d = 0; d < fill[static_cast<std::size_t>(i + 1)]; ++d)
        s.tokens.push_back(DsToken::Disjoint);
    }
    fn(s);
    return;
  }
  for (int take = 0; take <= remaining; ++take) {
    fill[static_cast<std::size_t>(slot)] = take;
    one_star_rec(slot + 1, slots, remaining - take, fill, fn);
  }
}

}  // namespace

void enumerate_one_star_strings(int vertex_tokens,
                                const std::function<void(const DsString&)>& fn) {
  if (vertex_tokens < 0 || vertex_tokens > 20)
    throw std::invalid_argument("one-star enumeration is limited to 20 vertex tokens");
  for (int t = 1; t <= vertex_tokens; ++t) {
    std::vector<int> fill(static_cast<std::size_t>(2 * t), 0);
    one_star_rec(0, 2 * t, vertex_tokens - t, fill, fn);
  }
}

}  // namespace shifted
