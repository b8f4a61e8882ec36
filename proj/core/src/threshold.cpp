#include "shifted/threshold.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "shifted/shifted_order.hpp"

namespace shifted {

ThresholdRecognition recognize_threshold(const Graph& g) {
  int n = g.vertex_count();
  std::uint64_t alive = full_mask(n);
  std::vector<CreationStep> deletions;
  while (alive) {
    bool removed = false;
    for (int v = 1; v <= n; ++v) {
      std::uint64_t vbit = std::uint64_t{1} << (v - 1);
      if (!(alive & vbit)) continue;
      if ((g.neighbor_mask(v) & alive) == 0) {
        deletions.push_back({StepKind::Disjoint, v});
        alive &= ~vbit;
        removed = true;
      }
    }
    if (removed) continue;
    for (int v = 1; v <= n && !removed; ++v) {
      std::uint64_t vbit = std::uint64_t{1} << (v - 1);
      if (!(alive & vbit)) continue;
      if ((g.neighbor_mask(v) & alive) == (alive & ~vbit)) {
        deletions.push_back({StepKind::Star, v});
        alive &= ~vbit;
        removed = true;
      }
    }
    if (!removed) return {std::nullopt, FaceSet::from_mask(alive)};
  }
  std::reverse(deletions.begin(), deletions.end());
  return {CreationSequence{std::move(deletions)}, FaceSet{}};
}

bool is_threshold(const Graph& g) { return recognize_threshold(g).sequence.has_value(); }

DsString encode_threshold(const Graph& g) {
  auto rec = recognize_threshold(g);
  if (!rec.sequence)
    throw std::invalid_argument("graph is not threshold; elimination stalls at " +
                                rec.stuck.to_string());
  DsString s;
  for (const CreationStep& step : rec.sequence->steps)
    s.tokens.push_back(step.kind == StepKind::Disjoint ? DsToken::Disjoint
                                                       : DsToken::Star);
  return s;
}

ThresholdCertificate certify(const Graph& g) {
  auto rec = recognize_threshold(g);
  if (!rec.sequence)
    throw std::invalid_argument("graph is not threshold; elimination stalls at " +
                                rec.stuck.to_string());
  const auto& steps = rec.sequence->steps;
  int m = static_cast<int>(
      std::count_if(steps.begin(), steps.end(),
                    [](const CreationStep& s) { return s.kind == StepKind::Disjoint; }));

  ThresholdCertificate cert;
  cert.weight.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  cert.threshold = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  int j = 0;                      // Disjoint steps seen so far
  std::uint64_t before = 0;      // their weight sum
  for (const CreationStep& step : steps) {
    if (step.kind == StepKind::Disjoint) {
      std::uint64_t w = std::uint64_t{1} << (m - ++j);
      cert.weight[static_cast<std::size_t>(step.vertex)] = w;
      before += w;
    } else {
      cert.weight[static_cast<std::size_t>(step.vertex)] = before;
    }
  }
  return cert;
}

bool verify_certificate(const Graph& g, const ThresholdCertificate& c) {
  int n = g.vertex_count();
  if (n > 20)
    throw std::invalid_argument("certificate verification is limited to 20 vertices, got " +
                                std::to_string(n));
  if (static_cast<int>(c.weight.size()) != n + 1)
    throw std::invalid_argument("certificate must weight exactly the graph's vertices");
  for (int v = 1; v <= n; ++v)
    if (c.weight[static_cast<std::size_t>(v)] == 0)
      throw std::invalid_argument("certificate weight for vertex " + std::to_string(v) +
                                  " must be positive");

  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u < top; ++u) {
    unsigned __int128 sum = 0;  // 20 weights can overflow 64 bits
    bool independent = true;
    for (std::uint64_t rem = u; rem; rem &= rem - 1) {
      int v = std::countr_zero(rem) + 1;
      sum += c.weight[static_cast<std::size_t>(v)];
      if (g.neighbor_mask(v) & u) independent = false;
    }
    if ((sum <= c.threshold) != independent) return false;
  }
  return true;
}

bool threshold_equals_shifted_graph(const Graph& g) {
  if (g.vertex_count() > 8)
    throw std::invalid_argument("threshold/shifted cross-check is limited to 8 vertices");
  bool threshold = is_threshold(g);
  bool shifted_edges = find_shifted_labeling(edge_complex(g)).has_value();
  if (threshold != shifted_edges)
    throw std::logic_error("threshold recognition and shifted labeling disagree on " +
                           g.to_string());
  return threshold;
}

}  // namespace shifted
