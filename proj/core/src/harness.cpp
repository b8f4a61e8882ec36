#include "shifted/harness.hpp"

#include "shifted/ds_string.hpp"
#include "shifted/enumerate.hpp"
#include "shifted/graph.hpp"
#include "shifted/graphical.hpp"
#include "shifted/isomorphism.hpp"
#include "shifted/shifted_order.hpp"
#include "shifted/simplicial_complex.hpp"
#include "shifted/threshold.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

namespace shifted {

namespace {

std::uint64_t binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t r = 1;
  for (int i = 1; i <= b; ++i)
    r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
  return r;
}

SimplicialComplex cx(std::initializer_list<std::initializer_list<VertexId>> faces,
                     int n) {
  std::vector<FaceSet> fs;
  for (const auto& f : faces) fs.push_back(FaceSet::of(f));
  return SimplicialComplex::from_facets(fs, n);
}

bool proper_balanced(const SimplicialComplex& k, const std::vector<int>& color) {
  const int top = k.dimension();
  for (VertexId v : k.support().vertices()) {
    const int c = color[static_cast<std::size_t>(v)];
    if (c < 0 || c > top) return false;
  }
  for (const FaceSet& f : k.facets()) {
    std::uint64_t seen = 0;
    for (VertexId v : f.vertices()) {
      const std::uint64_t bit = std::uint64_t{1}
                                << color[static_cast<std::size_t>(v)];
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

const char* yn(bool b) { return b ? "true" : "false"; }

// Per-worker accumulator; merged in worker index order so schedules do
// not show in the report.
struct Partial {
  std::uint64_t checked = 0;
  std::vector<Counterexample> found;
  std::string error;
};

struct SweepStop {};

void merge_partials(std::vector<Partial>& parts, VerdictReport& report) {
  for (Partial& p : parts) {
    if (!p.error.empty()) throw std::runtime_error(p.error);
    report.instances_checked += p.checked;
    for (Counterexample& c : p.found) report.counterexamples.push_back(std::move(c));
  }
}

void run_slots(int slots, const std::function<void(int)>& work) {
  if (slots == 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(slots));
  for (int s = 0; s < slots; ++s) pool.emplace_back(work, s);
  for (std::thread& t : pool) t.join();
}

int slot_count(std::uint64_t total, int workers) {
  const std::uint64_t w =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)),
                              std::max<std::uint64_t>(total, 1));
  return static_cast<int>(w);
}

// check: (const Graph&, Partial&)
template <typename Check>
void sweep_graphs(int n, int workers, bool first_only, VerdictReport& report,
                  const Check& check) {
  const std::uint64_t total = graph_count(n);
  const int slots = slot_count(total, workers);
  std::vector<Partial> parts(static_cast<std::size_t>(slots));
  run_slots(slots, [&](int slot) {
    Partial& p = parts[static_cast<std::size_t>(slot)];
    try {
      const std::uint64_t first = total * static_cast<std::uint64_t>(slot) /
                                  static_cast<std::uint64_t>(slots);
      const std::uint64_t last = total * (static_cast<std::uint64_t>(slot) + 1) /
                                 static_cast<std::uint64_t>(slots);
      for (std::uint64_t mask = first; mask < last; ++mask) {
        check(graph_from_edge_mask(n, mask), p);
        ++p.checked;
        if (first_only && !p.found.empty()) return;
      }
    } catch (const std::exception& e) {
      p.error = e.what();
    }
  });
  merge_partials(parts, report);
}

// check: (const SimplicialComplex&, Partial&). Partitioned by the smallest
// facet mask, so ranges are uneven but the merged order is the plain
// enumeration order.
template <typename Check>
void sweep_complexes(int n, bool pure_only, int workers, bool first_only,
                     VerdictReport& report, const Check& check) {
  const std::uint64_t top = std::uint64_t{1} << n;
  const int slots = slot_count(top, workers);
  std::vector<Partial> parts(static_cast<std::size_t>(slots));
  run_slots(slots, [&](int slot) {
    Partial& p = parts[static_cast<std::size_t>(slot)];
    try {
      const std::uint64_t first = top * static_cast<std::uint64_t>(slot) /
                                  static_cast<std::uint64_t>(slots);
      const std::uint64_t last = top * (static_cast<std::uint64_t>(slot) + 1) /
                                 static_cast<std::uint64_t>(slots);
      enumerate_complex_range(n, first, last, pure_only,
                              [&](const SimplicialComplex& k) {
                                check(k, p);
                                ++p.checked;
                                if (first_only && !p.found.empty()) throw SweepStop{};
                              });
    } catch (const SweepStop&) {
    } catch (const std::exception& e) {
      p.error = e.what();
    }
  });
  merge_partials(parts, report);
}

void run_t1(int n, int workers, bool first_only, VerdictReport& report) {
  sweep_graphs(n, workers, first_only, report, [](const Graph& g, Partial& p) {
    const bool threshold = is_threshold(g);
    const bool labelable =
        find_shifted_labeling(independence_complex(g)).has_value();
    if (threshold != labelable)
      p.found.push_back({g.to_string(),
                         std::string("is_threshold=") + yn(threshold) +
                             " but independence complex shifted-labelable=" +
                             yn(labelable)});
  });
}

void run_t2(int n, int workers, bool first_only, VerdictReport& report) {
  sweep_graphs(n, workers, first_only, report, [](const Graph& g, Partial& p) {
    if (!is_threshold(g)) return;
    const SimplicialComplex indep = independence_complex(g);
    if (!is_flag(indep)) {
      p.found.push_back({g.to_string(), "independence complex is not flag"});
      return;
    }
    const SimplicialComplex image = evaluate(flag_transform(encode_threshold(g)));
    if (!are_isomorphic(indep, image))
      p.found.push_back({g.to_string(),
                         "string image " + image.to_string() +
                             " is not isomorphic to independence complex " +
                             indep.to_string()});
  });
}

void check_t3_complex(const SimplicialComplex& k, Partial& p, int n) {
  if (k.support().size() != n) return;
  if (!is_shifted_under(k, identity_labeling(n))) return;
  const bool flag = is_flag(k);
  const bool balanced = find_balanced_coloring(k).has_value();
  const bool pencil = is_pencil(k);
  if (flag != balanced || flag != pencil)
    p.found.push_back({k.to_string(), std::string("flag=") + yn(flag) +
                                          " balanced=" + yn(balanced) +
                                          " pencil=" + yn(pencil)});
}

void check_t3_string(const DsString& s, Partial& p) {
  const std::string input = render_ds(s);
  const SimplicialComplex k = evaluate(s);
  if (!is_flag(k)) {
    p.found.push_back({input, "evaluation " + k.to_string() + " is not flag"});
    return;
  }
  if (!is_shifted_under(k, identity_labeling(k.vertex_count()))) {
    p.found.push_back({input, "evaluation is not shifted as labeled"});
    return;
  }
  if (!proper_balanced(k, one_star_coloring(s)))
    p.found.push_back({input, "constructed coloring is not a proper rainbow coloring"});
}

void run_t3(int n, int workers, bool first_only, VerdictReport& report) {
  sweep_complexes(n, true, workers, first_only, report,
                  [n](const SimplicialComplex& k, Partial& p) {
                    check_t3_complex(k, p, n);
                  });
  if (first_only && !report.counterexamples.empty()) return;
  Partial strings;
  try {
    enumerate_one_star_strings(n, [&](const DsString& s) {
      check_t3_string(s, strings);
      ++strings.checked;
      if (first_only && !strings.found.empty()) throw SweepStop{};
    });
  } catch (const SweepStop&) {
  }
  report.instances_checked += strings.checked;
  for (Counterexample& c : strings.found)
    report.counterexamples.push_back(std::move(c));
}

// Nine-edge downward closed edge sets, padded order on vertex pairs.
// Vertices outside every edge enter as singleton facets so the zeroth
// f-number stays n. Cheap enough that workers are not used.
void run_t4(int n, bool first_only, VerdictReport& report) {
  const int pairs = pair_count(n);
  if (pairs >= 9) {
    std::vector<std::uint32_t> below(static_cast<std::size_t>(pairs), 0);
    for (int p = 0; p < pairs; ++p) {
      const auto [a, b] = pair_from_index(p, n);
      for (int q = 0; q < pairs; ++q) {
        const auto [c, d] = pair_from_index(q, n);
        if (c <= a && d <= b) below[static_cast<std::size_t>(p)] |= 1u << q;
      }
    }
    std::array<int, 9> comb{};
    for (int i = 0; i < 9; ++i) comb[static_cast<std::size_t>(i)] = i;
    for (;;) {
      ++report.instances_checked;
      std::uint32_t chosen = 0;
      for (int c : comb) chosen |= 1u << c;
      bool ideal = true;
      for (int c : comb)
        if (below[static_cast<std::size_t>(c)] & ~chosen) {
          ideal = false;
          break;
        }
      if (ideal) {
        std::vector<FaceSet> facets;
        FaceSet covered;
        for (int c : comb) {
          const auto [a, b] = pair_from_index(c, n);
          facets.push_back(FaceSet::of({a, b}));
          covered = covered.united(facets.back());
        }
        for (VertexId v = 1; v <= n; ++v)
          if (!covered.contains(v)) facets.push_back(FaceSet::of({v}));
        const SimplicialComplex k = SimplicialComplex::from_facets(facets, n);
        const bool forced = k.is_face(FaceSet::of({1, 2})) &&
                            k.is_face(FaceSet::of({1, 3})) &&
                            k.is_face(FaceSet::of({2, 3}));
        const bool counts = k.f_vector() == FVector{n, 9};
        if (!forced || !counts) {
          report.counterexamples.push_back(
              {k.to_string(), forced ? "f-vector drifted from (n, 9)"
                                     : "missing one of the forced edges 12, 13, 23"});
          if (first_only) return;
        }
      }
      int i = 8;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == pairs - 9 + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < 9; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  if (n == 6) {
    ++report.instances_checked;
    Graph k33(6);
    for (VertexId u = 1; u <= 3; ++u)
      for (VertexId v = 4; v <= 6; ++v) k33.add_edge(u, v);
    const SimplicialComplex kc = edge_complex(k33);
    const auto coloring = find_balanced_coloring(kc);
    if (!is_flag(kc) || !coloring || !proper_balanced(kc, *coloring))
      report.counterexamples.push_back(
          {"complete bipartite 3x3", "expected a flag and balanced complex"});
  }
}

// The fixed non-pure iteration: seed, three rounds of the generalized
// independence construction, with shiftedness flipping back on at round
// three under the labeling that swaps 3 and 4.
void replay_iteration_chain(VerdictReport& report) {
  ++report.instances_checked;
  auto fail = [&](const std::string& what) {
    report.counterexamples.push_back({"iteration chain", what});
  };
  const SimplicialComplex seed = cx({{1, 2, 3}, {1, 4}, {2, 4}, {1, 5}}, 5);
  if (!is_shifted_under(seed, identity_labeling(5)))
    return fail("seed is not shifted as labeled");
  const SimplicialComplex i1 = gen_independence_complex(seed);
  if (i1 != cx({{1, 2}, {1, 3}, {2, 3, 5}, {3, 4, 5}}, 5))
    return fail("first round facets drifted: " + i1.to_string());
  if (find_shifted_labeling(i1))
    return fail("first round unexpectedly has a shifted labeling");
  const SimplicialComplex i2 = gen_independence_complex(i1);
  if (i2 != cx({{3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}}, 5))
    return fail("second round facets drifted: " + i2.to_string());
  if (find_shifted_labeling(i2))
    return fail("second round unexpectedly has a shifted labeling");
  const SimplicialComplex i3 = gen_independence_complex(i2);
  if (i3 != cx({{4, 5}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}}, 5))
    return fail("third round facets drifted: " + i3.to_string());
  if (!is_shifted_under(i3, VertexLabeling{0, 1, 2, 4, 3, 5}))
    return fail("third round is not shifted under the 3/4 swap");
}

void run_t5(int n, int workers, bool first_only, VerdictReport& report) {
  sweep_complexes(n, true, workers, first_only, report,
                  [](const SimplicialComplex& k, Partial& p) {
                    const bool ks = find_shifted_labeling(k).has_value();
                    const bool is =
                        find_shifted_labeling(gen_independence_complex(k)).has_value();
                    if (ks != is)
                      p.found.push_back(
                          {k.to_string(),
                           std::string("shifted-labelable=") + yn(ks) +
                               " but independent sets shifted-labelable=" + yn(is)});
                  });
  if (first_only && !report.counterexamples.empty()) return;
  if (n == 5) replay_iteration_chain(report);
}

void run_t6(int n, int workers, bool first_only, VerdictReport& report) {
  sweep_graphs(n, workers, first_only, report, [](const Graph& g, Partial& p) {
    const SimplicialComplex nb = neighborhood_complex(g);
    const SimplicialComplex dom = dominance_complex(g);
    for (const FaceSet& f : nb.facets())
      if (!dom.is_face(f)) {
        p.found.push_back({g.to_string(),
                           "neighborhood facet " + f.to_string() +
                               " is not a face of the dominance complex"});
        return;
      }
  });
}

void run_t7(int n, int workers, bool first_only, VerdictReport& report) {
  sweep_graphs(n, workers, first_only, report, [](const Graph& g, Partial& p) {
    const bool same = neighborhood_complex(g) == dominance_complex(g);
    const bool threshold = is_threshold(g);
    if (same != threshold)
      p.found.push_back({g.to_string(),
                         std::string("neighborhood==dominance is ") + yn(same) +
                             " but is_threshold=" + yn(threshold)});
  });
}

void run_t8(int n, int workers, bool first_only, VerdictReport& report) {
  sweep_graphs(n, workers, first_only, report, [](const Graph& g, Partial& p) {
    const SimplicialComplex dom = dominance_complex(g);
    const SimplicialComplex via =
        gen_independence_complex(closed_neighborhood_complex(g));
    if (dom != via)
      p.found.push_back({g.to_string(), "dominance " + dom.to_string() +
                                            " but closed neighborhood route " +
                                            via.to_string()});
  });
}

void run_hope(int n, int workers, bool first_only, VerdictReport& report) {
  const std::uint64_t total = graph_count(n);
  const int slots = slot_count(total, workers);
  std::vector<Partial> parts(static_cast<std::size_t>(slots));
  run_slots(slots, [&](int slot) {
    Partial& p = parts[static_cast<std::size_t>(slot)];
    // Shifted-labelability depends only on the face sets, so verdicts are
    // cached per facet list. Worker-local to stay lock free.
    std::map<std::vector<std::uint64_t>, bool> memo;
    auto labelable = [&memo](const SimplicialComplex& k) {
      const std::vector<std::uint64_t> key = k.facet_masks();
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      const bool v = find_shifted_labeling(k).has_value();
      if (memo.size() >= 400000) memo.clear();
      memo.emplace(key, v);
      return v;
    };
    try {
      const std::uint64_t first = total * static_cast<std::uint64_t>(slot) /
                                  static_cast<std::uint64_t>(slots);
      const std::uint64_t last = total * (static_cast<std::uint64_t>(slot) + 1) /
                                 static_cast<std::uint64_t>(slots);
      for (std::uint64_t mask = first; mask < last; ++mask) {
        const Graph g = graph_from_edge_mask(n, mask);
        const bool threshold = is_threshold(g);
        const bool closed = labelable(closed_neighborhood_complex(g));
        const bool dom = labelable(dominance_complex(g));
        if (threshold != closed)
          p.found.push_back(
              {g.to_string(), std::string("is_threshold=") + yn(threshold) +
                                  " but closed neighborhood complex "
                                  "shifted-labelable=" +
                                  yn(closed)});
        if (closed != dom)
          p.found.push_back(
              {g.to_string(),
               std::string("closed neighborhood complex shifted-labelable=") +
                   yn(closed) + " but dominance complex shifted-labelable=" +
                   yn(dom)});
        ++p.checked;
        if (first_only && !p.found.empty()) return;
      }
    } catch (const std::exception& e) {
      p.error = e.what();
    }
  });
  merge_partials(parts, report);
}

struct GoldenLog {
  VerdictReport* report;
  void expect(const std::string& name, bool ok, const std::string& detail) {
    ++report->instances_checked;
    if (!ok) report->counterexamples.push_back({name, detail});
  }
};

}  // namespace

std::optional<TheoremId> parse_theorem_id(const std::string& token) {
  std::string up = token;
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up.size() == 2 && up[0] == 'T' && up[1] >= '1' && up[1] <= '8')
    return static_cast<TheoremId>(up[1] - '1');
  if (up == "HOPE") return TheoremId::Hope;
  if (up == "GOLDEN") return TheoremId::Golden;
  return std::nullopt;
}

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Hope:
      return "HOPE";
    case TheoremId::Golden:
      return "golden";
    default:
      return "T" + std::to_string(static_cast<int>(id) + 1);
  }
}

int default_bound(TheoremId id) {
  switch (id) {
    case TheoremId::T2:
      return 7;
    case TheoremId::T5:
      return 5;
    case TheoremId::Hope:
      return 7;
    case TheoremId::Golden:
      return 0;
    default:
      return 6;
  }
}

std::uint64_t theorem_instance_count(TheoremId id, int n) {
  switch (id) {
    case TheoremId::T1:
    case TheoremId::T2:
    case TheoremId::T6:
    case TheoremId::T7:
    case TheoremId::T8:
    case TheoremId::Hope:
      return graph_count(n);
    case TheoremId::T3:
      return complex_count(n, true) + one_star_count(n);
    case TheoremId::T4:
      return binomial(pair_count(n), 9) + (n == 6 ? 1 : 0);
    case TheoremId::T5:
      return complex_count(n, true) + (n == 5 ? 1 : 0);
    case TheoremId::Golden:
      return 0;
  }
  return 0;
}

VerdictReport run_theorem(TheoremId id, int n, int workers, bool first_only) {
  if (id == TheoremId::Golden) return golden_examples();
  if (n < 1) throw std::invalid_argument("bound must be at least 1");
  VerdictReport report;
  report.theorem = theorem_name(id);
  report.bound = n;
  report.worker_count = std::max(workers, 1);
  const auto start = std::chrono::steady_clock::now();
  switch (id) {
    case TheoremId::T1:
      run_t1(n, report.worker_count, first_only, report);
      break;
    case TheoremId::T2:
      run_t2(n, report.worker_count, first_only, report);
      break;
    case TheoremId::T3:
      run_t3(n, report.worker_count, first_only, report);
      break;
    case TheoremId::T4:
      run_t4(n, first_only, report);
      break;
    case TheoremId::T5:
      run_t5(n, report.worker_count, first_only, report);
      break;
    case TheoremId::T6:
      run_t6(n, report.worker_count, first_only, report);
      break;
    case TheoremId::T7:
      run_t7(n, report.worker_count, first_only, report);
      break;
    case TheoremId::T8:
      run_t8(n, report.worker_count, first_only, report);
      break;
    case TheoremId::Hope:
      run_hope(n, report.worker_count, first_only, report);
      break;
    case TheoremId::Golden:
      break;
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

VerdictReport run_theorem_up_to(TheoremId id, int max_n, int workers,
                                bool first_only) {
  if (id == TheoremId::Golden) return golden_examples();
  if (max_n < 1) throw std::invalid_argument("bound must be at least 1");
  VerdictReport report;
  report.theorem = theorem_name(id);
  report.bound = max_n;
  report.worker_count = std::max(workers, 1);
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= max_n; ++n) {
    VerdictReport part = run_theorem(id, n, workers, first_only);
    report.instances_checked += part.instances_checked;
    for (Counterexample& c : part.counterexamples)
      report.counterexamples.push_back(std::move(c));
    if (first_only && !report.counterexamples.empty()) break;
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

VerdictReport run_hope_search(int bound, int workers) {
  return run_theorem_up_to(TheoremId::Hope, bound, workers, false);
}

VerdictReport golden_examples() {
  VerdictReport report;
  report.theorem = "golden";
  report.bound = 0;
  const auto start = std::chrono::steady_clock::now();
  GoldenLog log{&report};

  log.expect("facet list reduction",
             SimplicialComplex::from_facets(
                 {FaceSet::of({1, 2, 3}), FaceSet::of({1, 2}), FaceSet::of({1, 4}),
                  FaceSet::of({2, 4})},
                 4) == cx({{1, 2, 3}, {1, 4}, {2, 4}}, 4),
             "containment reduction changed the facet list");

  const SimplicialComplex running = cx({{1, 2, 3}, {1, 4}, {2, 4}}, 4);
  log.expect("running example contains face 14", running.is_face(FaceSet::of({1, 4})),
             "face 14 missing");
  log.expect("running example is not pure", !running.is_pure(), "purity misread");
  log.expect("running example is shifted as labeled",
             is_shifted_under(running, identity_labeling(4)), "swap check failed");
  log.expect("running example is an order ideal", is_order_ideal(running),
             "ideal check failed");
  log.expect("running example is not flag", !is_flag(running),
             "expected a three element minimal nonface");
  const auto running_nonfaces = running.minimal_nonfaces();
  log.expect("running example minimal nonface 124",
             std::find(running_nonfaces.begin(), running_nonfaces.end(),
                       FaceSet::of({1, 2, 4})) != running_nonfaces.end(),
             "124 not among the minimal nonfaces");
  const auto running_coloring = find_balanced_coloring(running);
  log.expect("running example is balanced",
             running_coloring && proper_balanced(running, *running_coloring),
             "no proper three coloring found");
  log.expect("running example is not a pencil", !is_pencil(running),
             "pencil check ignored impurity");

  log.expect("padded order 24 under 1356",
             padded_less_or_equal(FaceSet::of({2, 4}), FaceSet::of({1, 3, 5, 6})),
             "right aligned comparison failed");
  log.expect("padded order 14 under 24",
             padded_less_or_equal(FaceSet::of({1, 4}), FaceSet::of({2, 4})),
             "componentwise comparison failed");
  log.expect("face 24 without 14 breaks the ideal",
             !is_order_ideal(cx({{2, 4}}, 4)), "missing 14 went unnoticed");

  log.expect("star in dimension two gives the boundary sphere",
             star_d(cx({{1, 2, 3}}, 3), 4, 2) ==
                 cx({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, 4),
             "wrong facets after starring in dimension 2");
  log.expect("star in dimension three gives the solid simplex",
             star_d(cx({{1, 2, 3}}, 3), 4, 3) == cx({{1, 2, 3, 4}}, 4),
             "wrong facets after starring in dimension 3");

  const DsString walkthrough = parse_ds("DDSS|SSD|S");
  log.expect("walkthrough string token counts",
             walkthrough.tokens.size() == 10 && walkthrough.bar_count() == 2 &&
                 walkthrough.vertex_token_count() == 8,
             "token bookkeeping drifted");
  {
    bool threw = false;
    try {
      parse_ds("DD|D");
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    log.expect("dangling bar rejected", threw,
               "a bar with no later star parsed");
  }
  log.expect("canonical form moves the disjoint vertex ahead of the bar",
             render_ds(canonicalize(parse_ds("DDSS|SS|DS"))) == "DDSS|SSD|S",
             "bar bubbling failed");
  log.expect("canonical form starts with a disjoint vertex",
             render_ds(canonicalize(parse_ds("SD"))) == "DD",
             "leading star kept");
  log.expect("bar placement does not change the complex",
             evaluate(parse_ds("DDSS|SS|DS")) == evaluate(parse_ds("DDSS|SSD|S")),
             "the two spellings evaluated differently");
  {
    const VertexLabeling labels = label_from_string(walkthrough);
    const std::vector<VertexId> want = {6, 7, 5, 4, 3, 2, 8, 1};
    bool ok = labels.size() == 9;
    for (std::size_t i = 0; ok && i < want.size(); ++i)
      ok = labels[i + 1] == want[i];
    log.expect("walkthrough labels", ok, "dominance labels drifted");
  }
  {
    const SimplicialComplex k = evaluate(walkthrough);
    log.expect("walkthrough complex is shifted as labeled",
               k.vertex_count() == 8 && is_shifted_under(k, identity_labeling(8)),
               "evaluation is not shifted under its own labels");
  }

  log.expect("threshold string to flag string",
             render_ds(flag_transform(parse_ds("DDSDSDSSD"))) == "S|SD|SD|SDD|S",
             "token rewrite drifted");
  log.expect("flag image string has one star per dimension",
             is_one_star_per_dimension(parse_ds("S|SD|SD|SDD|S")),
             "segment star count wrong");
  log.expect("two stars in one dimension detected",
             !is_one_star_per_dimension(parse_ds("DDSS|SS")),
             "crowded segment accepted");
  log.expect("pencil string form has one star per dimension",
             is_one_star_per_dimension(parse_ds("DDDDS|S|S")),
             "pencil form rejected");
  log.expect("pencil string evaluates to a pencil",
             is_pencil(evaluate(parse_ds("DDDS|S"))), "pencil shape lost");
  log.expect("a single simplex is a pencil", is_pencil(cx({{1, 2, 3}}, 3)),
             "one facet should count as n minus d facets");

  {
    Graph path4(4);
    path4.add_edge(1, 2);
    path4.add_edge(2, 3);
    path4.add_edge(3, 4);
    log.expect("path on four vertices is not threshold", !is_threshold(path4),
               "elimination should stall");
  }
  log.expect("path complex has no shifted labeling",
             !find_shifted_labeling(cx({{1, 2}, {2, 3}, {3, 4}}, 4)).has_value(),
             "a labeling was found for the path");

  {
    const SimplicialComplex seed = cx({{1, 2, 3}, {1, 4}, {2, 4}, {1, 5}}, 5);
    log.expect("iteration seed is shifted as labeled",
               is_shifted_under(seed, identity_labeling(5)), "seed swap check failed");
    const SimplicialComplex i1 = gen_independence_complex(seed);
    log.expect("first iteration facets",
               i1 == cx({{1, 2}, {1, 3}, {2, 3, 5}, {3, 4, 5}}, 5),
               "got " + i1.to_string());
    log.expect("first iteration is not shifted as labeled",
               !is_shifted_under(i1, identity_labeling(5)), "swap check passed");
    log.expect("first iteration has no shifted labeling",
               !find_shifted_labeling(i1).has_value(), "a labeling was found");
    log.expect("first iteration minimal nonfaces are the seed facets",
               i1.minimal_nonfaces() == seed.facets(),
               "duality between facets and minimal nonfaces broke");
    const SimplicialComplex induced =
        i1.induced_subcomplex(FaceSet::of({1, 2, 4, 5}));
    log.expect("first iteration induced on 1245 is a path",
               induced.facets() == cx({{1, 2}, {2, 5}, {4, 5}}, 5).facets(),
               "got " + induced.to_string());
    const SimplicialComplex i2 = gen_independence_complex(i1);
    log.expect("second iteration facets",
               i2 == cx({{3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}}, 5),
               "got " + i2.to_string());
    log.expect("second iteration has no shifted labeling",
               !find_shifted_labeling(i2).has_value(), "a labeling was found");
    const SimplicialComplex i3 = gen_independence_complex(i2);
    log.expect("third iteration facets",
               i3 == cx({{4, 5}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}}, 5),
               "got " + i3.to_string());
    log.expect("third iteration shifted by swapping three and four",
               is_shifted_under(i3, VertexLabeling{0, 1, 2, 4, 3, 5}) &&
                   find_shifted_labeling(i3).has_value(),
               "the 3/4 swap is not a shifted labeling");
  }

  {
    Graph k33(6);
    for (VertexId u = 1; u <= 3; ++u)
      for (VertexId v = 4; v <= 6; ++v) k33.add_edge(u, v);
    const SimplicialComplex kc = edge_complex(k33);
    log.expect("complete bipartite complex counts", kc.f_vector() == FVector({6, 9}),
               "f-vector is not (6, 9)");
    log.expect("complete bipartite complex is flag", is_flag(kc),
               "a large minimal nonface appeared");
    const auto coloring = find_balanced_coloring(kc);
    log.expect("complete bipartite complex is balanced",
               coloring && proper_balanced(kc, *coloring),
               "no two coloring by sides found");
  }
  {
    const SimplicialComplex sym = padded_order_ideal({FaceSet::of({2, 6})}, 6);
    log.expect("symmetric image counts", sym.f_vector() == FVector({6, 9}),
               "ideal under 26 is not (6, 9)");
    const auto nf = sym.minimal_nonfaces();
    log.expect("symmetric image has minimal nonface 123",
               std::find(nf.begin(), nf.end(), FaceSet::of({1, 2, 3})) != nf.end(),
               "123 not among the minimal nonfaces");
    log.expect("symmetric image is not flag", !is_flag(sym), "flag misread");
    log.expect("symmetric image is not balanced",
               !find_balanced_coloring(sym).has_value(),
               "a two coloring of a triangle appeared");
  }
  {
    const SimplicialComplex ext =
        padded_order_ideal({FaceSet::of({2, 5}), FaceSet::of({3, 4})}, 6);
    const auto nf = ext.minimal_nonfaces();
    log.expect("exterior image has minimal nonface 123",
               !is_flag(ext) && std::find(nf.begin(), nf.end(),
                                          FaceSet::of({1, 2, 3})) != nf.end(),
               "123 not among the minimal nonfaces");
    log.expect("exterior image is not balanced",
               !find_balanced_coloring(ext).has_value(),
               "a two coloring of a triangle appeared");
  }
  {
    Graph k4(4);
    for (VertexId u = 1; u <= 4; ++u)
      for (VertexId v = u + 1; v <= 4; ++v) k4.add_edge(u, v);
    log.expect("complete graph needs more colors than its dimension allows",
               !find_balanced_coloring(edge_complex(k4)).has_value(),
               "a two coloring of a four clique appeared");
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string report_to_json(const VerdictReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem;
  j["bound"] = report.bound;
  j["checked"] = report.instances_checked;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Counterexample& c : report.counterexamples) {
    nlohmann::ordered_json item;
    item["input"] = c.input;
    item["detail"] = c.detail;
    list.push_back(std::move(item));
  }
  j["counterexamples"] = std::move(list);
  if (include_timing) {
    j["elapsed_ms"] = report.elapsed_ms;
    j["jobs"] = report.worker_count;
  }
  return j.dump(2);
}

}  // namespace shifted
