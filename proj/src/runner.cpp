#include "conespec/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace conespec {

namespace {

bool is_expected(const RunConfig& config, const std::string& name) {
  return std::find(config.expected_failures.begin(), config.expected_failures.end(), name) !=
         config.expected_failures.end();
}

void add_finding(RunResult& result, const RunConfig& config, const std::string& analysis,
                 const std::string& name, bool passed) {
  result.findings.push_back({analysis, name, passed, !passed && is_expected(config, name)});
}

ConeMap load_map(const RunConfig& config) {
  if (!config.builtin.empty()) return builtin_map(config.builtin);
  std::ifstream in(config.input_path);
  if (!in) throw std::runtime_error("cannot open input file: " + config.input_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw SchemaError("/", std::string("input is not valid JSON: ") + e.what());
  }
  return parse_map_description(j);
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  std::map<std::string, std::string> texts;
  try {
    if (config.budget < 1 || config.n_max < 1 || !(config.tol > 0))
      throw std::runtime_error("config requires budget >= 1, n_max >= 1, tol > 0");
    if (config.input_path.empty() == config.builtin.empty())
      throw std::runtime_error("exactly one of input_path or builtin must be given");
    if (config.analyses.empty()) throw std::runtime_error("no analyses requested");

    const ConeMap map = load_map(config);
    for (const std::string& analysis : config.analyses) {
      if (analysis == "spectral") {
        const SpectralReport report = spectral_report(map, config.n_max, config.budget,
                                                      config.seed);
        result.reports[analysis] = to_json(report);
        add_finding(result, config, analysis, "spectral_chain", report.chain_consistent);
      } else if (analysis == "hypotheses") {
        const ImplicationAuditReport audit = implication_audit(map, config.budget, config.seed);
        Json j = to_json(audit);
        const HypothesisVerdict a2 = check_A2_orbit(
            map, to_eigen(map.domain().interior_point()), 1e6, config.n_max);
        j["A2"] = to_json(a2);
        result.reports[analysis] = j;
        add_finding(result, config, analysis, "SSP", audit.ssp.passed());
        add_finding(result, config, analysis, "B1", audit.b1.passed());
        add_finding(result, config, analysis, "B2", audit.b2.passed());
        add_finding(result, config, analysis, "SSI", audit.ssi.passed());
        add_finding(result, config, analysis, "A2", a2.verdict != Verdict::fail);
        add_finding(result, config, analysis, "implication_lattice", audit.consistent);
      } else if (analysis == "superadditive") {
        const SuperadditiveAnalysis sa =
            analyze_superadditive(map, std::max(config.budget, 50), config.seed);
        result.reports[analysis] = to_json(sa);
        add_finding(result, config, analysis, "superadditive_ordering", sa.ordering_ok);
        add_finding(result, config, analysis, "superadditive_bound", sa.bound_ok);
        if (sa.uniqueness_checked)
          add_finding(result, config, analysis, "superadditive_uniqueness", sa.uniqueness_ok);
      } else if (analysis == "counterexample") {
        if (config.builtin != kBuiltinCounterexample)
          throw std::runtime_error(
              "the counterexample analysis applies to the builtin counterexample map only");
        RefutationOptions opts;
        opts.seed = config.seed;
        const RefutationReport report = refutation_report(opts);
        result.reports[analysis] = to_json(report);
        texts[analysis] = to_text(report);
        add_finding(result, config, analysis, "refutation",
                    report.uniqueness_refuted && report.simplicity_refuted);
      } else if (analysis == "case_analysis") {
        if (config.builtin != kBuiltinCounterexample)
          throw std::runtime_error(
              "the case_analysis analysis applies to the builtin counterexample map only");
        const CaseAnalysisReport report =
            verify_case_analysis(std::max<long>(config.budget, 1000), config.seed);
        result.reports[analysis] = to_json(report);
        add_finding(result, config, analysis, "case_analysis", report.total_violations == 0);
      } else {
        throw std::runtime_error("unknown analysis \"" + analysis + "\"");
      }
    }
  } catch (const SchemaError& e) {
    result.exit_code = 1;
    result.error = std::string("schema violation at ") + e.pointer() + ": " + e.what();
    return result;
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.error = e.what();
    return result;
  }

  for (const Finding& f : result.findings)
    if (!f.passed && !f.expected_failure) result.exit_code = 2;

  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    for (const auto& [analysis, report] : result.reports) {
      if (config.format == "text" || texts.count(analysis)) {
        std::ofstream out(std::filesystem::path(config.output_dir) / (analysis + ".txt"));
        out << (texts.count(analysis) ? texts[analysis]
                                      : render_report(analysis, report, "text"));
      }
      if (config.format == "json" || !texts.count(analysis)) {
        std::ofstream out(std::filesystem::path(config.output_dir) / (analysis + ".json"));
        out << report.dump(2) << "\n";
      }
    }
  }
  return result;
}

std::string render_report(const std::string&, const Json& report, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    os << report.dump(2) << "\n";
    return os.str();
  }
  return report.dump(2) + "\n";
}

}  // namespace conespec
