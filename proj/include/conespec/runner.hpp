#pragma once

#include "conespec/io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conespec {

/// Batch run configuration. The seed fully determines every sampled verdict;
/// reports carry no timestamps, so identical configs produce byte-identical
/// output.
struct RunConfig {
  std::string input_path;                 // map description file, or
  std::string builtin;                    // builtin name
  std::vector<std::string> analyses;      // spectral, hypotheses, superadditive,
                                          // counterexample, case_analysis
  unsigned seed = 1;
  int budget = 1000;
  int n_max = 64;
  double tol = kDefaultTol;
  int threads = 1;                        // accepted; analyses are verdict-deterministic
  std::string output_dir;                 // empty: stdout only
  std::string format = "json";            // json | text
  std::vector<std::string> expected_failures;  // finding names that may fail
};

struct Finding {
  std::string analysis;
  std::string name;
  bool passed = false;
  bool expected_failure = false;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 error, 2 unexpected failure
  std::vector<Finding> findings;
  std::map<std::string, Json> reports;  // analysis name -> report
  std::string error;                    // nonempty on exit 1
};

RunResult run(const RunConfig& config);

/// Renders a report for the requested format ("text" falls back to pretty
/// JSON for analyses without a dedicated text form).
std::string render_report(const std::string& analysis, const Json& report,
                          const std::string& format);

}  // namespace conespec
