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

#ifndef FMODLEN_PIPELINE_HPP_
#define FMODLEN_PIPELINE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fmodlen/monomial.hpp"

namespace fmodlen {

// Coefficient field F_{p^e}. An empty modulus picks the default irreducible
// polynomial for the (p, e) pair; otherwise little-endian, monic, length e+1.
struct FieldDesc {
  uint32_t p = 0;
  uint32_t e = 1;
  std::vector<uint32_t> modulus;
};

// A full problem statement: the ring R = F_q[vars], the homogeneous ideal I,
// the range of cohomological indices j (lambda_j is computed for each), the
// computation path, and the verification settings.
struct ProblemSpec {
  FieldDesc field;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;  // generator strings in the input grammar
  int j_lo = 0;                    // 0 means the default range [1, n]
  int j_hi = 0;
  std::string path = "ext";  // "ext" | "hassewitt" | "both"
  bool verify = false;
  uint32_t extension_check = 2;  // degree r for the F_{q^r} invariance check
  bool allow_zero_ideal = false;
  MonomialOrder order = MonomialOrder::Grevlex;
};

// Parses the JSON problem format:
//   {"field": {"p": 5, "e": 1}, "vars": ["x","y","z"],
//    "ideal": ["y^2*z - x^3 - x*z^2"], "j_range": [1, 2],
//    "path": "ext", "verify": false, "extension_check": 2}
// Optional keys: field.modulus, order ("grevlex"|"grlex"|"lex"),
// allow_zero_ideal. Throws std::invalid_argument with a description of the
// offending key; generator syntax errors carry the generator index and byte
// offset.
ProblemSpec parse_problem(const std::string& json_text);

struct RunOptions {
  std::string cache_dir;       // empty: no resolution cache
  bool audit_groebner = false;
  double budget_seconds = 0;   // <= 0: no limit
  std::string path_override;   // empty: use the spec's path
};

// Exit code contract: 0 = success, 2 = a verification check failed,
// 3 = budget exceeded (the report names the checkpoint directory).
// Input and validation errors throw instead.
struct RunResult {
  int exit_code = 0;
  std::string report_json;
};

// End-to-end run: Groebner basis, free resolution (cached when a cache
// directory is given), Frobenius chain lift, per-j Cartier stable dimension
// lambda_j, finite-length verdict and conclusion, optional verification
// transcript. Deterministic for a fixed input.
RunResult run_problem(const ProblemSpec& spec, const RunOptions& opts = {});

// Renders a report produced by run_problem as a short human-readable text.
std::string render_report_text(const std::string& report_json);

}  // namespace fmodlen

#endif  // FMODLEN_PIPELINE_HPP_
