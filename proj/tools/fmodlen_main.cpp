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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fmodlen/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "fmodlen: F-module length of local cohomology of a projective scheme,\n"
      "computed through Cartier operators on graded Ext pieces"};
  app.require_subcommand(1);

  std::string input, output, cache_dir, path_override;
  bool text = false;
  bool audit = false;
  double budget = 0;

  CLI::App* run = app.add_subcommand("run", "analyze one problem file");
  run->add_option("input", input, "problem JSON file")->required()->check(CLI::ExistingFile);
  CLI::Option* out_opt =
      run->add_option("--output", output, "write the JSON report to this file");
  run->add_flag("--text", text, "print a human-readable report instead of JSON")
      ->excludes(out_opt);
  run->add_option("--cache-dir", cache_dir, "resolution cache / checkpoint directory");
  run->add_flag("--audit-groebner", audit, "re-certify the Groebner basis from scratch");
  run->add_option("--budget-seconds", budget, "wall-clock budget; exceeding it exits 3");
  run->add_option("--path", path_override, "override the computation path")
      ->check(CLI::IsMember({"ext", "hassewitt", "both"}));

  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(input);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) {
      std::cerr << "error: cannot read " << input << "\n";
      return 1;
    }

    fmodlen::ProblemSpec spec = fmodlen::parse_problem(buf.str());
    fmodlen::RunOptions opts;
    opts.cache_dir = cache_dir;
    opts.audit_groebner = audit;
    opts.budget_seconds = budget;
    opts.path_override = path_override;

    fmodlen::RunResult result = fmodlen::run_problem(spec, opts);

    if (!output.empty()) {
      std::ofstream outf(output, std::ios::trunc);
      outf << result.report_json << "\n";
      if (!outf.good()) {
        std::cerr << "error: cannot write " << output << "\n";
        return 1;
      }
      std::cout << "report written to " << output << " (exit " << result.exit_code << ")\n";
    } else if (text) {
      std::cout << fmodlen::render_report_text(result.report_json);
    } else {
      std::cout << result.report_json << "\n";
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
