// Command line front end. Subcommands:
//   parse-ds           canonical form, labels, and evaluation of a string
//   certify-threshold  creation sequence plus integer vertex weights
//   build              derived complexes of a graph or complex
//   check              single property of a complex, exit code carries it
//   verify             exhaustive sweeps and the golden replays
// Exit codes: 0 success / property holds / no counterexample, 1 property
// fails or a counterexample was found, 2 usage or input errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "shifted/ds_string.hpp"
#include "shifted/graphical.hpp"
#include "shifted/harness.hpp"
#include "shifted/shifted_order.hpp"
#include "shifted/text_io.hpp"
#include "shifted/threshold.hpp"

#include <iostream>
#include <string>

namespace {

using nlohmann::ordered_json;

ordered_json face_array(const shifted::FaceSet& f) {
  ordered_json a = ordered_json::array();
  for (shifted::VertexId v : f.vertices()) a.push_back(v);
  return a;
}

int run_parse_ds(const std::string& text, bool as_json) {
  const shifted::DsString s = shifted::parse_ds(text);
  const shifted::DsString canon = shifted::canonicalize(s);
  const shifted::VertexLabeling labels = shifted::label_from_string(s);
  const shifted::SimplicialComplex k = shifted::evaluate(s);
  if (as_json) {
    ordered_json j;
    j["input"] = shifted::render_ds(s);
    j["canonical"] = shifted::render_ds(canon);
    ordered_json ls = ordered_json::array();
    for (std::size_t i = 1; i < labels.size(); ++i) ls.push_back(labels[i]);
    j["labels"] = std::move(ls);
    j["n"] = k.vertex_count();
    ordered_json fs = ordered_json::array();
    for (const shifted::FaceSet& f : k.facets()) fs.push_back(face_array(f));
    j["facets"] = std::move(fs);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "input: " << shifted::render_ds(s) << "\n";
  std::cout << "canonical: " << shifted::render_ds(canon) << "\n";
  std::cout << "labels:";
  for (std::size_t i = 1; i < labels.size(); ++i) std::cout << ' ' << labels[i];
  std::cout << "\n";
  std::cout << "complex: " << k.to_string() << "\n";
  return 0;
}

int run_certify(const std::string& path) {
  const shifted::Graph g = shifted::read_graph_file(path);
  const shifted::ThresholdRecognition rec = shifted::recognize_threshold(g);
  ordered_json j;
  j["is_threshold"] = rec.sequence.has_value();
  if (!rec.sequence) {
    j["stuck"] = face_array(rec.stuck);
    std::cout << j.dump(2) << "\n";
    return 1;
  }
  ordered_json steps = ordered_json::array();
  for (const shifted::CreationStep& st : rec.sequence->steps) {
    ordered_json step;
    step["op"] = st.kind == shifted::StepKind::Disjoint ? "D" : "S";
    step["vertex"] = st.vertex;
    steps.push_back(std::move(step));
  }
  j["creation_sequence"] = std::move(steps);
  const shifted::ThresholdCertificate cert = shifted::certify(g);
  ordered_json ws = ordered_json::array();
  for (std::size_t v = 1; v < cert.weight.size(); ++v) ws.push_back(cert.weight[v]);
  j["weights"] = std::move(ws);
  j["t"] = cert.threshold;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_build(const std::string& op, const std::string& path) {
  shifted::SimplicialComplex out = shifted::SimplicialComplex::void_complex(0);
  if (op == "gen-indep") {
    out = shifted::gen_independence_complex(shifted::read_complex_file(path));
  } else {
    const shifted::Graph g = shifted::read_graph_file(path);
    if (op == "indep")
      out = shifted::independence_complex(g);
    else if (op == "dom")
      out = shifted::dominance_complex(g);
    else if (op == "nbhd")
      out = shifted::neighborhood_complex(g);
    else if (op == "closed-nbhd")
      out = shifted::closed_neighborhood_complex(g);
    else
      throw CLI::ValidationError("--op", "unknown operation " + op);
  }
  std::cout << shifted::render_complex(out);
  return 0;
}

int run_check(const std::string& property, const std::string& path) {
  const shifted::SimplicialComplex k = shifted::read_complex_file(path);
  bool holds = false;
  if (property == "flag")
    holds = shifted::is_flag(k);
  else if (property == "balanced")
    holds = shifted::find_balanced_coloring(k).has_value();
  else if (property == "pencil")
    holds = shifted::is_pencil(k);
  else if (property == "pure")
    holds = k.is_pure();
  else if (property == "shifted")
    holds = shifted::find_shifted_labeling(k).has_value();
  else
    throw CLI::ValidationError("--property", "unknown property " + property);
  std::cout << (holds ? "true" : "false") << "\n";
  return holds ? 0 : 1;
}

int run_verify(const std::string& theorem, int max_n, int jobs, bool as_json,
               bool first_only) {
  const auto id = shifted::parse_theorem_id(theorem);
  if (!id) {
    std::cerr << "unknown theorem id: " << theorem << "\n";
    return 2;
  }
  int bound = max_n > 0 ? max_n : shifted::default_bound(*id);
  if (*id != shifted::TheoremId::Golden && bound > shifted::default_bound(*id))
    std::cerr << "warning: bound " << bound << " is above the default "
              << shifted::default_bound(*id) << "; this can take a while\n";
  const shifted::VerdictReport report =
      *id == shifted::TheoremId::Golden
          ? shifted::golden_examples()
          : shifted::run_theorem_up_to(*id, bound, jobs, first_only);
  if (as_json) {
    std::cout << shifted::report_to_json(report) << "\n";
  } else {
    std::cout << "theorem: " << report.theorem << "\n"
              << "bound: " << report.bound << "\n"
              << "checked: " << report.instances_checked << "\n"
              << "counterexamples: " << report.counterexamples.size() << "\n";
    for (const shifted::Counterexample& c : report.counterexamples)
      std::cout << "  " << c.input << " :: " << c.detail << "\n";
    std::cout << "elapsed_ms: " << report.elapsed_ms << "\n"
              << "jobs: " << report.worker_count << "\n";
  }
  // Hope sweeps report findings, not failures; completing the run is the
  // success condition there.
  if (*id == shifted::TheoremId::Hope) return 0;
  return report.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shifted complexes, threshold graphs, and their certificates"};
  app.require_subcommand(1);

  std::string ds_text;
  bool ds_json = false;
  CLI::App* parse_cmd = app.add_subcommand("parse-ds", "parse a D/S/| string");
  parse_cmd->add_option("string", ds_text, "the string, e.g. DDSS|SSD|S")
      ->required();
  parse_cmd->add_flag("--json", ds_json, "emit JSON");

  std::string certify_path;
  CLI::App* certify_cmd =
      app.add_subcommand("certify-threshold", "weights and threshold for a graph");
  certify_cmd->add_option("graph-file", certify_path, "edge list file")->required();

  std::string build_op;
  std::string build_path;
  CLI::App* build_cmd = app.add_subcommand("build", "derived complex of the input");
  build_cmd
      ->add_option("--op", build_op,
                   "one of indep, gen-indep, dom, nbhd, closed-nbhd")
      ->required();
  build_cmd->add_option("file", build_path, "graph file (complex for gen-indep)")
      ->required();

  std::string check_prop;
  std::string check_path;
  CLI::App* check_cmd = app.add_subcommand("check", "test one property of a complex");
  check_cmd
      ->add_option("--property", check_prop,
                   "one of flag, balanced, pencil, pure, shifted")
      ->required();
  check_cmd->add_option("file", check_path, "facet list file")->required();

  std::string verify_theorem;
  int verify_max_n = 0;
  int verify_jobs = 1;
  bool verify_json = false;
  bool verify_first = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run an exhaustive sweep");
  verify_cmd->add_option("--theorem", verify_theorem, "T1..T8, HOPE, or golden")
      ->required();
  verify_cmd->add_option("--max-n", verify_max_n,
                         "sweep sizes 1..N (default: the per-theorem bound)");
  verify_cmd->add_option("--jobs", verify_jobs, "worker count")
      ->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--json", verify_json, "emit the JSON report");
  verify_cmd->add_flag("--first-counterexample", verify_first,
                       "stop at the first counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(parse_cmd)) return run_parse_ds(ds_text, ds_json);
    if (app.got_subcommand(certify_cmd)) return run_certify(certify_path);
    if (app.got_subcommand(build_cmd)) return run_build(build_op, build_path);
    if (app.got_subcommand(check_cmd)) return run_check(check_prop, check_path);
    if (app.got_subcommand(verify_cmd))
      return run_verify(verify_theorem, verify_max_n, verify_jobs, verify_json,
                        verify_first);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
