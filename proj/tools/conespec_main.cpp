// Batch front end: load a map description (or a builtin), run the selected
// analyses, emit one report per analysis.

#include "conespec/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cone spectral analysis of order-preserving 1-homogeneous maps"};

  conespec::RunConfig config;
  std::string analyses = "spectral,hypotheses";
  std::string expected;
  app.add_option("--input", config.input_path, "map description JSON file");
  app.add_option("--builtin", config.builtin, "builtin map name");
  app.add_option("--analyses", analyses,
                 "comma-separated: spectral,hypotheses,superadditive,counterexample,case_analysis");
  app.add_option("--seed", config.seed, "RNG seed (determines every sampled verdict)");
  app.add_option("--budget", config.budget, "sample budget per checker");
  app.add_option("--n-max", config.n_max, "iteration count for spectral estimates");
  app.add_option("--tol", config.tol, "float-path tolerance");
  app.add_option("--threads", config.threads, "worker threads (verdicts are thread-count independent)");
  app.add_option("--output", config.output_dir, "report output directory");
  app.add_option("--format", config.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--expected-failures", expected,
                 "comma-separated finding names that are expected to fail");
  CLI11_PARSE(app, argc, argv);

  config.analyses = split_list(analyses);
  config.expected_failures = split_list(expected);

  const conespec::RunResult result = conespec::run(config);
  if (result.exit_code == 1) {
    std::cerr << "error: " << result.error << "\n";
    return 1;
  }
  for (const conespec::Finding& f : result.findings) {
    const char* status = f.passed ? "pass" : f.expected_failure ? "expected-fail" : "FAIL";
    std::cout << "[" << status << "] " << f.analysis << "/" << f.name << "\n";
  }
  if (config.output_dir.empty())
    for (const auto& [analysis, report] : result.reports)
      std::cout << "--- " << analysis << " ---\n" << report.dump(2) << "\n";
  return result.exit_code;
}
