#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shifted/ds_string.hpp"
#include "shifted/graph.hpp"

namespace shifted {

enum class StepKind { Disjoint, Star };

struct CreationStep {
  StepKind kind;
  VertexId vertex;
};

/// How a threshold graph is built: each step adds the named vertex either
/// disjoint from, or joined to, everything built so far. The first step is
/// always Disjoint.
struct CreationSequence {
  std::vector<CreationStep> steps;
};

/// Outcome of the elimination run. Exactly one field is meaningful: a
/// creation sequence when the graph emptied, otherwise the vertices still
/// standing when neither an isolated nor a dominating vertex exists.
struct ThresholdRecognition {
  std::optional<CreationSequence> sequence;
  FaceSet stuck;
};

/// Reverse elimination: repeatedly delete every isolated vertex (ascending
/// id), else the smallest dominating vertex. The graph is threshold iff it
/// empties; the creation sequence is the deletion order reversed.
ThresholdRecognition recognize_threshold(const Graph& g);

bool is_threshold(const Graph& g);

/// The creation sequence as a bar-free construction string, one token per
/// step. Errors: g not threshold.
DsString encode_threshold(const Graph& g);

/// Integer vertex weights w and a threshold t such that a vertex set U is
/// independent iff w(U) <= t.
struct ThresholdCertificate {
  std::vector<std::uint64_t> weight;  // by vertex id, slot 0 unused
  std::uint64_t threshold = 0;
};

/// Weights read off the creation sequence: with m Disjoint steps, the j-th
/// Disjoint vertex (creation order) weighs 2^(m-j) and t = 2^m - 1; a Star
/// vertex weighs t minus the Disjoint weights after it, equivalently the
/// Disjoint weights before it. Independent sets then sum to at most t while
/// any edge already exceeds it. Errors: g not threshold.
ThresholdCertificate certify(const Graph& g);

/// Exhaustively checks the defining iff over all 2^n vertex subsets.
/// Guard: n <= 20. A certificate without a positive weight for every
/// vertex is rejected as an error, not a false verdict.
bool verify_certificate(const Graph& g, const ThresholdCertificate& c);

/// Self-test tying the two views together: returns is_threshold(g) and
/// throws logic_error if the edge complex's shifted-labeling search
/// disagrees. Guard: n <= 8.
bool threshold_equals_shifted_graph(const Graph& g);

}  // namespace shifted
