// Copyright 2026 The fmodlen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "fmodlen/pipeline.hpp"

using namespace fmodlen;
using nlohmann::json;

namespace {

std::string elliptic_input(const std::string& cubic, const std::string& extra = "") {
  return R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y", "z"],
             "ideal": [")" +
         cubic + R"("], "j_range": [1, 2])" + extra + "}";
}

int lambda_of_row(const json& report, int j) {
  for (const auto& row : report.at("rows"))
    if (row.at("j").get<int>() == j) return row.at("lambda").get<int>();
  FAIL("row not found for j");
  return -1;
}

}  // namespace

TEST_CASE("parse_problem applies defaults and validates") {
  ProblemSpec s = parse_problem(
      R"({"field": {"p": 7, "e": 1}, "vars": ["x", "y"], "ideal": ["x^2"]})");
  CHECK(s.field.p == 7);
  CHECK(s.field.e == 1);
  CHECK(s.field.modulus.empty());
  CHECK(s.vars == std::vector<std::string>{"x", "y"});
  CHECK(s.j_lo == 0);
  CHECK(s.j_hi == 0);
  CHECK(s.path == "ext");
  CHECK_FALSE(s.verify);
  CHECK(s.extension_check == 2);
  CHECK(s.order == MonomialOrder::Grevlex);

  ProblemSpec t = parse_problem(
      R"({"field": {"p": 2, "e": 2, "modulus": [1, 1, 1]}, "vars": ["x", "y"],
          "ideal": ["x"], "j_range": [1, 1], "path": "both", "verify": true,
          "extension_check": 3, "order": "lex", "allow_zero_ideal": true})");
  CHECK(t.field.modulus == std::vector<uint32_t>{1, 1, 1});
  CHECK(t.j_lo == 1);
  CHECK(t.j_hi == 1);
  CHECK(t.path == "both");
  CHECK(t.verify);
  CHECK(t.extension_check == 3);
  CHECK(t.order == MonomialOrder::Lex);
  CHECK(t.allow_zero_ideal);
}

TEST_CASE("parse_problem rejects malformed input") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_problem(text), std::invalid_argument);
  };
  bad("not json at all");
  bad(R"({"vars": ["x"], "ideal": ["x"]})");                                // no field
  bad(R"({"field": {"p": 5}, "ideal": ["x"]})");                            // no vars
  bad(R"({"field": {"p": 5}, "vars": ["x", "y"]})");                        // no ideal
  bad(R"({"field": {"p": 1}, "vars": ["x", "y"], "ideal": ["x"]})");        // p too small
  bad(R"({"field": {"p": 5, "e": 0}, "vars": ["x", "y"], "ideal": ["x"]})");
  bad(R"({"field": {"p": 5, "blah": 1}, "vars": ["x", "y"], "ideal": ["x"]})");
  bad(R"({"field": {"p": 5}, "vars": ["x", "y"], "ideal": ["x"], "blah": 1})");
  bad(R"({"field": {"p": 5}, "vars": ["x", "x"], "ideal": ["x"]})");        // dup var
  bad(R"({"field": {"p": 5}, "vars": ["x", "y"], "ideal": ["x"], "j_range": [2, 1]})");
  bad(R"({"field": {"p": 5}, "vars": ["x", "y"], "ideal": ["x"], "j_range": [0, 1]})");
  bad(R"({"field": {"p": 5}, "vars": ["x", "y"], "ideal": ["x"], "path": "fast"})");
  bad(R"({"field": {"p": 5}, "vars": ["x", "y"], "ideal": ["x"], "order": "degrevlex"})");
  bad(R"({"field": {"p": 5}, "vars": ["x", "y"], "ideal": ["x"], "extension_check": 0})");
  bad(R"({"field": {"p": 5, "e": 2, "modulus": [7, 0, 1]}, "vars": ["x", "y"], "ideal": ["x"]})");
}

TEST_CASE("generator errors carry the index and offset") {
  ProblemSpec s = parse_problem(
      R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y"], "ideal": ["x^2", "x + w"]})");
  try {
    run_problem(s);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("ideal[1]") != std::string::npos);
    CHECK(msg.find("offset 4") != std::string::npos);
    CHECK(msg.find("unknown variable 'w'") != std::string::npos);
  }
}

TEST_CASE("unit and zero ideals are rejected with clear messages") {
  ProblemSpec unit = parse_problem(
      R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y"], "ideal": ["x", "3"]})");
  CHECK_THROWS_WITH_AS(run_problem(unit), "empty scheme", std::invalid_argument);

  ProblemSpec zero = parse_problem(
      R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y"], "ideal": ["0"]})");
  CHECK_THROWS_AS(run_problem(zero), std::invalid_argument);

  ProblemSpec allowed = parse_problem(
      R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y"], "ideal": ["0"],
          "allow_zero_ideal": true})");
  RunResult r = run_problem(allowed);
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  for (const auto& row : rep.at("rows")) CHECK(row.at("lambda").get<int>() == 0);

  ProblemSpec big_j = parse_problem(
      R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y"], "ideal": ["x"], "j_range": [1, 5]})");
  CHECK_THROWS_AS(run_problem(big_j), std::invalid_argument);
}

TEST_CASE("ordinary and supersingular elliptic curves") {
  ProblemSpec ord = parse_problem(elliptic_input(
      "y^2*z - x^3 - x*z^2", R"(, "path": "both", "verify": true)"));
  RunResult r = run_problem(ord);
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  CHECK(rep.at("status") == "ok");
  CHECK(rep.at("n") == 2);
  CHECK(lambda_of_row(rep, 1) == 1);
  CHECK(lambda_of_row(rep, 2) == 0);
  for (const auto& row : rep.at("rows")) {
    CHECK(row.at("path") == "both");
    CHECK(row.at("paths_agree").get<bool>());
  }
  CHECK(rep.at("verification").at("all_passed").get<bool>());
  // The curve itself gives an infinite-length module; the complementary row
  // sees the zero module.
  for (const auto& row : rep.at("rows")) {
    if (row.at("j") == 1) {
      CHECK_FALSE(row.at("finite_length").get<bool>());
      CHECK(row.at("conclusion") == "Hom-dimension only (support hypothesis not verified)");
      CHECK(row.at("lyubeznik") == "not computed");
    } else {
      CHECK(row.at("finite_length").get<bool>());
      CHECK(row.at("ext_module_zero").get<bool>());
      CHECK(row.at("conclusion") == "H^0_I(R) = 0 = E^0, F-length = 0");
      CHECK(row.at("max_E_power_quotient") == 0);
    }
  }

  ProblemSpec ss = parse_problem(elliptic_input("y^2*z - x^3 - z^3"));
  json rep2 = json::parse(run_problem(ss).report_json);
  CHECK(lambda_of_row(rep2, 1) == 0);
  CHECK(lambda_of_row(rep2, 2) == 0);
}

TEST_CASE("hassewitt path requires a principal ideal") {
  ProblemSpec s = parse_problem(
      R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y", "z", "w"],
          "ideal": ["x*z - y^2", "x*w - y*z", "y*w - z^2"], "path": "hassewitt"})");
  CHECK_THROWS_WITH_AS(run_problem(s),
                       "path \"hassewitt\" needs a principal ideal; use path \"ext\"",
                       std::invalid_argument);
}

TEST_CASE("verified run over the twisted cubic") {
  ProblemSpec s = parse_problem(
      R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y", "z", "w"],
          "ideal": ["x*z - y^2", "x*w - y*z", "y*w - z^2"], "j_range": [1, 3],
          "verify": true})");
  RunResult r = run_problem(s);
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  CHECK(rep.at("verification").at("all_passed").get<bool>());
  CHECK(rep.at("resolution").at("complete").get<bool>());
  CHECK(rep.at("resolution").at("length") == 2);
  // The curve is a smooth rational curve, so every lambda_j vanishes; the
  // j = 1 module is nevertheless nonzero of infinite length.
  CHECK(lambda_of_row(rep, 1) == 0);
  CHECK(lambda_of_row(rep, 2) == 0);
  CHECK(lambda_of_row(rep, 3) == 0);
  for (const auto& row : rep.at("rows"))
    if (row.at("j") == 1) CHECK_FALSE(row.at("finite_length").get<bool>());

  // Every named check reports a status; the shift and permutation checks
  // must have actually run.
  bool saw_shift = false, saw_perm = false;
  for (const auto& c : rep.at("verification").at("checks")) {
    std::string status = c.at("status");
    CHECK((status == "pass" || status == "skipped"));
    if (c.at("name") == "generator_shift" && status == "pass") saw_shift = true;
    if (c.at("name") == "generator_permutation" && status == "pass") saw_perm = true;
  }
  CHECK(saw_shift);
  CHECK(saw_perm);
}

TEST_CASE("quadric surface rows and conclusions") {
  ProblemSpec s = parse_problem(
      R"({"field": {"p": 3, "e": 1}, "vars": ["x", "y", "z", "w"],
          "ideal": ["x*y - z*w"], "j_range": [1, 3], "path": "both"})");
  RunResult r = run_problem(s);
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  // Smooth quadric in P^3: only H^3 matters and it vanishes; all lambda zero
  // except nothing, with the j = 1 row seeing the zero module E^0.
  for (const auto& row : rep.at("rows")) {
    int j = row.at("j").get<int>();
    if (j == 1) {
      CHECK(row.at("lambda") == 0);
      CHECK(row.at("finite_length").get<bool>());
      CHECK(row.at("ext_module_zero").get<bool>());
      CHECK(row.at("conclusion") == "H^2_I(R) = 0 = E^0, F-length = 0");
      CHECK(row.at("lyubeznik").is_object());
      CHECK(row.at("lyubeznik").at("j") == 2);
      CHECK(row.at("lyubeznik").at("lambda_0") == 0);
    }
    if (j == 3) {
      // codim 1 piece: infinite length, Hom dimension only.
      CHECK(row.at("hom_index") == 0);
    }
  }
}

TEST_CASE("resolution cache hits on the second run") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fmodlen_cache_test";
  fs::remove_all(dir);
  ProblemSpec s = parse_problem(elliptic_input("y^2*z - x^3 - x*z^2"));
  RunOptions opts;
  opts.cache_dir = dir.string();

  json first = json::parse(run_problem(s, opts).report_json);
  CHECK_FALSE(first.at("cache").at("resolution_hit").get<bool>());
  json second = json::parse(run_problem(s, opts).report_json);
  CHECK(second.at("cache").at("resolution_hit").get<bool>());
  CHECK(first.at("cache").at("key") == second.at("cache").at("key"));
  CHECK(lambda_of_row(first, 1) == lambda_of_row(second, 1));
  CHECK(first.at("resolution").at("modules") == second.at("resolution").at("modules"));

  // A different ideal gets a different key.
  ProblemSpec other = parse_problem(elliptic_input("y^2*z - x^3 - z^3"));
  json third = json::parse(run_problem(other, opts).report_json);
  CHECK_FALSE(third.at("cache").at("resolution_hit").get<bool>());
  CHECK(third.at("cache").at("key") != first.at("cache").at("key"));
  fs::remove_all(dir);
}

TEST_CASE("budget exhaustion reports a checkpoint") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fmodlen_budget_test";
  fs::remove_all(dir);
  ProblemSpec s = parse_problem(
      R"({"field": {"p": 5, "e": 1}, "vars": ["x", "y", "z", "w"],
          "ideal": ["x*z - y^2", "x*w - y*z", "y*w - z^2"], "j_range": [1, 3]})");

  // Prime the cache so the tiny-budget rerun gets past the Groebner stage
  // deterministically.
  RunOptions prime;
  prime.cache_dir = dir.string();
  REQUIRE(run_problem(s, prime).exit_code == 0);

  RunOptions tiny;
  tiny.cache_dir = dir.string();
  tiny.budget_seconds = 1e-9;
  RunResult r = run_problem(s, tiny);
  CHECK(r.exit_code == 3);
  json rep = json::parse(r.report_json);
  CHECK(rep.at("status") == "budget exceeded");
  CHECK_FALSE(rep.at("stage").get<std::string>().empty());
  CHECK(rep.at("checkpoint").is_string());
  CHECK(rep.at("exit_code") == 3);
  fs::remove_all(dir);
}

TEST_CASE("path overrides replace the spec path") {
  ProblemSpec s = parse_problem(elliptic_input("y^2*z - x^3 - x*z^2"));
  RunOptions opts;
  opts.path_override = "hassewitt";
  json rep = json::parse(run_problem(s, opts).report_json);
  CHECK(rep.at("path") == "hassewitt");
  CHECK(lambda_of_row(rep, 1) == 1);
  for (const auto& row : rep.at("rows"))
    if (row.at("j") == 1) CHECK(row.contains("hassewitt_operator"));
}

TEST_CASE("report schema carries the run parameters") {
  ProblemSpec s = parse_problem(elliptic_input("y^2*z - x^3 - x*z^2"));
  json rep = json::parse(run_problem(s).report_json);
  CHECK(rep.at("tool") == "fmodlen");
  CHECK(rep.at("field").at("p") == 5);
  CHECK(rep.at("field").at("e") == 1);
  CHECK(rep.at("order") == "grevlex");
  CHECK(rep.at("vars") == json::array({"x", "y", "z"}));
  CHECK(rep.at("j_range") == json::array({1, 2}));
  CHECK(rep.at("reduced_groebner").is_array());
  CHECK(rep.at("timings").at("total_seconds").is_number());
  CHECK(rep.at("notes").is_array());
  CHECK(rep.at("exit_code") == 0);
  for (const auto& row : rep.at("rows")) {
    CHECK(row.contains("hom_index"));
    CHECK(row.contains("ext_piece_dim"));
    CHECK(row.contains("operator"));
    CHECK(row.contains("stable_index"));
    CHECK(row.contains("timings"));
  }

  std::string text = render_report_text(rep.dump());
  CHECK(text.find("lambda") != std::string::npos);
  CHECK(text.find("status: ok") != std::string::npos);
}

TEST_CASE("verification failure is impossible to fake quietly") {
  // Sanity: a verified supersingular run still passes all checks; exit 2 is
  // reserved for genuine disagreements, which the suite cannot fabricate
  // without corrupting internals.
  ProblemSpec s = parse_problem(elliptic_input(
      "y^2*z - x^3 - z^3", R"(, "path": "both", "verify": true)"));
  RunResult r = run_problem(s);
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report_json);
  CHECK(rep.at("verification").at("requested").get<bool>());
  int executed = 0;
  for (const auto& c : rep.at("verification").at("checks"))
    if (c.at("status") == "pass") ++executed;
  CHECK(executed >= 4);
}
