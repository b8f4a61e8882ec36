#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shifted {

// Exhaustive sweeps for the equivalences the library is built around.
// Each id covers one statement:
//   T1   threshold graphs are the graphs whose independence complex has a
//        shifted labeling
//   T2   for threshold G, independence_complex(G) is flag and is isomorphic
//        to the evaluation of the transformed creation string
//   T3   pure shifted complexes: balanced, flag, and pencil coincide; plus
//        the constructive coloring over all one-star strings
//   T4   every shifted one-dimensional complex with full support and nine
//        edges contains the edges {12}, {13}, {23}
//   T5   pure complexes: K has a shifted labeling iff gen_independence_complex(K)
//        does, plus a fixed replay of the non-pure iteration chain
//   T6   neighborhood_complex(G) is a subcomplex of dominance_complex(G)
//   T7   neighborhood_complex(G) = dominance_complex(G) iff G is threshold
//   T8   dominance_complex(G) = gen_independence_complex(closed_neighborhood_complex(G))
//   Hope the search for graphs where threshold and the shiftedness of
//        N[G] or D(G) disagree; witnesses here are findings, not failures
//   Golden fixed worked examples with frozen expected output
enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, Hope, Golden };

/// Accepts "T1".."T8", "HOPE", "golden" (case-insensitive).
std::optional<TheoremId> parse_theorem_id(const std::string& token);
std::string theorem_name(TheoremId id);

/// Largest bound exercised by default; golden has no bound and returns 0.
int default_bound(TheoremId id);

struct Counterexample {
  std::string input;
  std::string detail;
};

struct VerdictReport {
  std::string theorem;
  int bound = 0;
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::int64_t elapsed_ms = 0;
  int worker_count = 1;
};

/// Closed-form instance count for one exact-size sweep, used both for work
/// partitioning and to cross-check progress accounting in tests.
std::uint64_t theorem_instance_count(TheoremId id, int n);

/// Sweeps every instance of size exactly n. Workers split the enumeration
/// into contiguous index ranges; partial results are merged in range order,
/// so the report does not depend on the worker count. The small fixed-size
/// sweeps (T4 subsets, string phases, chain replays) always run on the
/// coordinator. With first_only the scan stops early and instances_checked
/// reflects only the work actually done.
/// Errors: bound outside the enumeration guards.
VerdictReport run_theorem(TheoremId id, int n, int workers = 1,
                          bool first_only = false);

/// Cumulative sweep over sizes 1..max_n merged into one report.
VerdictReport run_theorem_up_to(TheoremId id, int max_n, int workers = 1,
                                bool first_only = false);

/// Cumulative Hope sweep; witnesses are expected at bound 4 and up.
VerdictReport run_hope_search(int bound, int workers = 1);

/// Replays the frozen worked examples; mismatches become counterexamples.
VerdictReport golden_examples();

/// {theorem, bound, checked, counterexamples, elapsed_ms, jobs}. With
/// include_timing false the elapsed_ms and jobs fields are omitted, which
/// makes reports from different runs and worker counts byte-comparable.
std::string report_to_json(const VerdictReport& report, bool include_timing = true);

}  // namespace shifted
