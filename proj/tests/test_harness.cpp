#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "shifted/enumerate.hpp"
#include "shifted/harness.hpp"

using namespace shifted;

namespace {

void expect_clean(const VerdictReport& r) {
  for (const Counterexample& c : r.counterexamples)
    FAIL_CHECK("unexpected counterexample: " << c.input << " -- " << c.detail);
  CHECK(r.counterexamples.empty());
}

}  // namespace

TEST_CASE("theorem ids parse case-insensitively") {
  CHECK(parse_theorem_id("T1") == TheoremId::T1);
  CHECK(parse_theorem_id("t3") == TheoremId::T3);
  CHECK(parse_theorem_id("HOPE") == TheoremId::Hope);
  CHECK(parse_theorem_id("hope") == TheoremId::Hope);
  CHECK(parse_theorem_id("golden") == TheoremId::Golden);
  CHECK(parse_theorem_id("Golden") == TheoremId::Golden);
  CHECK(!parse_theorem_id("T9").has_value());
  CHECK(!parse_theorem_id("T0").has_value());
  CHECK(!parse_theorem_id("").has_value());
  CHECK(!parse_theorem_id("threshold").has_value());

  for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4,
                       TheoremId::T5, TheoremId::T6, TheoremId::T7, TheoremId::T8,
                       TheoremId::Hope, TheoremId::Golden}) {
    CHECK(parse_theorem_id(theorem_name(id)) == id);
  }
}

TEST_CASE("default bounds") {
  CHECK(default_bound(TheoremId::T1) == 6);
  CHECK(default_bound(TheoremId::T2) == 7);
  CHECK(default_bound(TheoremId::T3) == 6);
  CHECK(default_bound(TheoremId::T4) == 6);
  CHECK(default_bound(TheoremId::T5) == 5);
  CHECK(default_bound(TheoremId::T6) == 6);
  CHECK(default_bound(TheoremId::T7) == 6);
  CHECK(default_bound(TheoremId::T8) == 6);
  CHECK(default_bound(TheoremId::Hope) == 7);
  CHECK(default_bound(TheoremId::Golden) == 0);
}

TEST_CASE("instance counts") {
  CHECK(theorem_instance_count(TheoremId::T1, 4) == 64);
  CHECK(theorem_instance_count(TheoremId::T2, 4) == 64);
  CHECK(theorem_instance_count(TheoremId::T6, 5) == 1024);
  CHECK(theorem_instance_count(TheoremId::T7, 6) == 32768);
  CHECK(theorem_instance_count(TheoremId::T3, 3) == 16 + 8);
  CHECK(theorem_instance_count(TheoremId::T3, 4) == 95 + 21);
  CHECK(theorem_instance_count(TheoremId::T4, 4) == 0);
  CHECK(theorem_instance_count(TheoremId::T4, 5) == 10);
  CHECK(theorem_instance_count(TheoremId::T4, 6) == 5006);
  CHECK(theorem_instance_count(TheoremId::T5, 4) == 95);
  CHECK(theorem_instance_count(TheoremId::T5, 5) == 2111);
  CHECK(theorem_instance_count(TheoremId::Golden, 3) == 0);
}

TEST_CASE("small sweeps come back clean and fully counted") {
  for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T5,
                       TheoremId::T6, TheoremId::T7, TheoremId::T8}) {
    VerdictReport r = run_theorem(id, 4);
    expect_clean(r);
    CHECK(r.theorem == theorem_name(id));
    CHECK(r.bound == 4);
    CHECK(r.instances_checked == theorem_instance_count(id, 4));
  }
  for (int n : {5, 6}) {
    VerdictReport r = run_theorem(TheoremId::T4, n);
    expect_clean(r);
    CHECK(r.instances_checked == theorem_instance_count(TheoremId::T4, n));
  }
}

TEST_CASE("cumulative sweeps add up") {
  VerdictReport r = run_theorem_up_to(TheoremId::T7, 4);
  expect_clean(r);
  CHECK(r.bound == 4);
  CHECK(r.instances_checked == 1 + 2 + 8 + 64);
}

TEST_CASE("bounds below one are rejected") {
  CHECK_THROWS_AS(run_theorem(TheoremId::T1, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_theorem_up_to(TheoremId::T6, -2), std::invalid_argument);
  // The worked examples have no bound to validate.
  CHECK_NOTHROW(run_theorem(TheoremId::Golden, 0));
}

TEST_CASE("worked examples replay exactly") {
  VerdictReport r = golden_examples();
  expect_clean(r);
  CHECK(r.theorem == "golden");
  CHECK(r.bound == 0);
  CHECK(r.instances_checked == 49);
  CHECK(run_theorem(TheoremId::Golden, 3).instances_checked == r.instances_checked);
}

TEST_CASE("the hope sweep records its witnesses") {
  VerdictReport r = run_hope_search(4);
  CHECK(r.instances_checked == 1 + 2 + 8 + 64);
  REQUIRE(!r.counterexamples.empty());
  bool found_cycle = false;
  for (const Counterexample& c : r.counterexamples)
    if (c.input == "n=4: 1-2 1-4 2-3 3-4") found_cycle = true;
  CHECK(found_cycle);
}

TEST_CASE("reports do not depend on the worker count") {
  CHECK(report_to_json(run_theorem(TheoremId::T7, 4, 1), false) ==
        report_to_json(run_theorem(TheoremId::T7, 4, 3), false));
  CHECK(report_to_json(run_theorem(TheoremId::T5, 4, 1), false) ==
        report_to_json(run_theorem(TheoremId::T5, 4, 2), false));
  CHECK(report_to_json(run_hope_search(4, 1), false) ==
        report_to_json(run_hope_search(4, 2), false));
  CHECK(report_to_json(golden_examples(), false) ==
        report_to_json(golden_examples(), false));
}

TEST_CASE("report serialization") {
  VerdictReport r = run_theorem(TheoremId::T1, 2);
  std::string timed = report_to_json(r, true);
  std::string plain = report_to_json(r, false);

  auto jt = nlohmann::json::parse(timed);
  CHECK(jt["theorem"] == "T1");
  CHECK(jt["bound"] == 2);
  CHECK(jt["checked"] == 2);
  CHECK(jt["counterexamples"].is_array());
  CHECK(jt["counterexamples"].empty());
  CHECK(jt.contains("elapsed_ms"));
  CHECK(jt["jobs"] == 1);

  auto jp = nlohmann::json::parse(plain);
  CHECK(!jp.contains("elapsed_ms"));
  CHECK(!jp.contains("jobs"));

  // Stable key order keeps reports diffable.
  CHECK(plain.find("\"theorem\"") < plain.find("\"bound\""));
  CHECK(plain.find("\"bound\"") < plain.find("\"checked\""));
  CHECK(plain.find("\"checked\"") < plain.find("\"counterexamples\""));

  auto jw = nlohmann::json::parse(report_to_json(run_hope_search(4), false));
  REQUIRE(!jw["counterexamples"].empty());
  CHECK(jw["counterexamples"][0].contains("input"));
  CHECK(jw["counterexamples"][0].contains("detail"));
}

TEST_SUITE("slow") {

TEST_CASE("five-vertex sweeps come back clean") {
  for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T5,
                       TheoremId::T6, TheoremId::T7, TheoremId::T8}) {
    VerdictReport r = run_theorem(id, 5);
    expect_clean(r);
    CHECK(r.instances_checked == theorem_instance_count(id, 5));
  }
}

TEST_CASE("six-vertex reports match across worker counts") {
  CHECK(report_to_json(run_theorem(TheoremId::T1, 6, 1), false) ==
        report_to_json(run_theorem(TheoremId::T1, 6, 3), false));
}

}  // TEST_SUITE("slow")
