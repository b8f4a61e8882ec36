#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "shifted/ds_string.hpp"
#include "shifted/enumerate.hpp"
#include "shifted/graph.hpp"
#include "shifted/threshold.hpp"

using namespace shifted;

namespace {

// Independent check: a graph is threshold exactly when no four vertices
// induce a perfect matching, a path, or a cycle. On four labeled vertices
// those are the only graphs with (edge count, sorted degrees) equal to
// (2, 1111), (3, 1122), (4, 2222), so matching the signature is exact.
bool free_of_four_vertex_obstructions(const Graph& g) {
  int n = g.vertex_count();
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c)
        for (VertexId d = c + 1; d <= n; ++d) {
          VertexId quad[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.is_edge(quad[i], quad[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          std::sort(deg, deg + 4);
          bool matching = edges == 2 && deg[0] == 1;
          bool path = edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2;
          bool cycle = edges == 4 && deg[0] == 2;
          if (matching || path || cycle) return false;
        }
  return true;
}

// Rebuilds the graph a creation sequence describes.
Graph replay(int n, const CreationSequence& seq) {
  Graph g(n);
  FaceSet placed;
  for (const CreationStep& step : seq.steps) {
    if (step.kind == StepKind::Star)
      for (VertexId u : placed.vertices()) g.add_edge(u, step.vertex);
    placed = placed.with(step.vertex);
  }
  return g;
}

const Graph kPath4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph kCycle4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
const Graph kMatching4 = Graph::from_edges(4, {{1, 2}, {3, 4}});

}  // namespace

TEST_CASE("elimination stalls on the three obstructions") {
  for (const Graph& g : {kPath4, kCycle4, kMatching4}) {
    auto rec = recognize_threshold(g);
    CHECK(!rec.sequence.has_value());
    CHECK(rec.stuck == FaceSet::of({1, 2, 3, 4}));
    CHECK(!is_threshold(g));
  }
}

TEST_CASE("elimination peels removable vertices before stalling") {
  // An isolated vertex goes first, then the path stalls.
  Graph path_plus_isolated = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}});
  auto rec = recognize_threshold(path_plus_isolated);
  CHECK(!rec.sequence.has_value());
  CHECK(rec.stuck == FaceSet::of({1, 2, 3, 4}));

  // A dominating apex over a four-cycle goes first, then the cycle stalls.
  Graph apex_over_cycle = Graph::from_edges(
      5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  rec = recognize_threshold(apex_over_cycle);
  CHECK(!rec.sequence.has_value());
  CHECK(rec.stuck == FaceSet::of({1, 2, 3, 4}));
}

TEST_CASE("recognition reports the creation order") {
  Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
  auto rec = recognize_threshold(k3);
  REQUIRE(rec.sequence.has_value());
  CHECK(rec.stuck.empty());
  const auto& steps = rec.sequence->steps;
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].kind == StepKind::Disjoint);
  CHECK(steps[0].vertex == 3);
  CHECK(steps[1].kind == StepKind::Star);
  CHECK(steps[1].vertex == 2);
  CHECK(steps[2].kind == StepKind::Star);
  CHECK(steps[2].vertex == 1);

  CHECK(is_threshold(Graph(0)));
  CHECK(recognize_threshold(Graph(0)).sequence->steps.empty());
}

TEST_CASE("construction strings of small graphs") {
  CHECK(render_ds(encode_threshold(Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}}))) == "DSS");
  CHECK(render_ds(encode_threshold(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}))) == "DDDS");
  CHECK(render_ds(encode_threshold(Graph(3))) == "DDD");
  CHECK(render_ds(encode_threshold(Graph::from_edges(
            4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}))) == "DSSS");
  CHECK(render_ds(encode_threshold(Graph::from_edges(3, {{1, 2}, {2, 3}}))) == "DDS");
}

TEST_CASE("recognition matches the four-vertex obstruction scan") {
  const std::uint64_t expected[] = {0, 1, 2, 8, 46, 332};
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t hits = 0;
    enumerate_graphs(n, [&](const Graph& g) {
      bool t = is_threshold(g);
      CHECK(t == free_of_four_vertex_obstructions(g));
      if (t) ++hits;
    });
    CHECK(hits == expected[n]);
  }
}

TEST_CASE("creation sequences rebuild their graph") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      auto rec = recognize_threshold(g);
      if (!rec.sequence.has_value()) return;
      const auto& steps = rec.sequence->steps;
      REQUIRE(steps.size() == static_cast<std::size_t>(n));
      CHECK(steps.front().kind == StepKind::Disjoint);
      FaceSet placed;
      for (const CreationStep& s : steps) placed = placed.with(s.vertex);
      CHECK(placed == FaceSet::from_mask(full_mask(n)));
      CHECK(replay(n, *rec.sequence) == g);
      CHECK(encode_threshold(g).vertex_token_count() == n);
      CHECK(encode_threshold(g).bar_count() == 0);
    });
  }
}

TEST_CASE("certificate weights of small graphs") {
  // Path 1-2-3: built as 3, 1 disjoint, then 2 starred.
  auto cert = certify(Graph::from_edges(3, {{1, 2}, {2, 3}}));
  CHECK(cert.weight == std::vector<std::uint64_t>{0, 1, 3, 2});
  CHECK(cert.threshold == 3);

  // Star with center 1: the three leaves halve, the center takes the sum.
  cert = certify(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(cert.weight == std::vector<std::uint64_t>{0, 7, 1, 2, 4});
  CHECK(cert.threshold == 7);

  // Complete graph: one disjoint step, so every vertex weighs 1 against t=1.
  cert = certify(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(cert.weight == std::vector<std::uint64_t>{0, 1, 1, 1, 1});
  CHECK(cert.threshold == 1);
}

TEST_CASE("certificates verify across the sweep") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (!is_threshold(g)) return;
      auto cert = certify(g);
      REQUIRE(cert.weight.size() == static_cast<std::size_t>(n) + 1);
      CHECK(verify_certificate(g, cert));
    });
  }
}

TEST_CASE("tampered certificates fail verification") {
  Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  auto cert = certify(p3);
  REQUIRE(verify_certificate(p3, cert));

  auto bumped = cert;
  bumped.weight[1] = 4;  // {1,3} is independent but now sums past t
  CHECK(!verify_certificate(p3, bumped));

  auto lowered = cert;
  lowered.threshold = 2;  // same set now lands above t
  CHECK(!verify_certificate(p3, lowered));

  Graph k2 = Graph::from_edges(2, {{1, 2}});
  auto loose = certify(k2);
  loose.threshold = 3;  // the edge no longer exceeds t
  CHECK(!verify_certificate(k2, loose));
}

TEST_CASE("malformed certificates are errors, not verdicts") {
  Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  auto cert = certify(p3);

  auto zero = cert;
  zero.weight[2] = 0;
  CHECK_THROWS_AS(verify_certificate(p3, zero), std::invalid_argument);

  auto short_cert = cert;
  short_cert.weight.pop_back();
  CHECK_THROWS_AS(verify_certificate(p3, short_cert), std::invalid_argument);

  ThresholdCertificate ones;
  ones.weight.assign(22, 1);
  ones.threshold = 1;
  CHECK_THROWS_AS(verify_certificate(Graph(21), ones), std::invalid_argument);
}

TEST_CASE("non-threshold graphs cannot be encoded or certified") {
  try {
    (void)encode_threshold(kPath4);
    FAIL("expected a stalled elimination to throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("stalls at {1,2,3,4}") != std::string::npos);
  }
  try {
    (void)certify(kCycle4);
    FAIL("expected a stalled elimination to throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("stalls at {1,2,3,4}") != std::string::npos);
  }
}

TEST_CASE("recognition agrees with the shifted labeling of the edge complex") {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t seen = 0;
    enumerate_graphs(n, [&](const Graph& g) {
      CHECK(threshold_equals_shifted_graph(g) == is_threshold(g));
      ++seen;
    });
    CHECK(seen == graph_count(n));
  }
  CHECK_THROWS_AS(threshold_equals_shifted_graph(Graph(9)), std::invalid_argument);
}

TEST_CASE("the edgeless graph on 64 vertices is certified exactly") {
  Graph g(64);
  CHECK(is_threshold(g));
  auto cert = certify(g);
  CHECK(cert.weight[1] == 1);
  CHECK(cert.weight[64] == std::uint64_t{1} << 63);
  CHECK(cert.threshold == ~std::uint64_t{0});
  CHECK_THROWS_AS(verify_certificate(g, cert), std::invalid_argument);
}

TEST_SUITE("slow") {

TEST_CASE("six-vertex recognition matches the obstruction scan") {
  std::uint64_t hits = 0;
  enumerate_graphs(6, [&](const Graph& g) {
    bool t = is_threshold(g);
    CHECK(t == free_of_four_vertex_obstructions(g));
    if (t) {
      ++hits;
      CHECK(verify_certificate(g, certify(g)));
      CHECK(replay(6, *recognize_threshold(g).sequence) == g);
    }
  });
  CHECK(hits == 2874);
}

TEST_CASE("six-vertex recognition agrees with shifted labelings") {
  enumerate_graphs(6, [&](const Graph& g) {
    CHECK(threshold_equals_shifted_graph(g) == is_threshold(g));
  });
}

}  // TEST_SUITE("slow")
