// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion.

#include "conespec/counterexample.hpp"
#include "conespec/hypotheses.hpp"
#include "conespec/io.hpp"
#include "conespec/runner.hpp"
#include "conespec/spectral.hpp"
#include "conespec/superadditive.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace conespec;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = {}) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RVec rv(std::initializer_list<long long> vals) {
  RVec out;
  for (long long v : vals) out.emplace_back(v);
  return out;
}

RMat rm(std::initializer_list<std::initializer_list<long long>> rows) {
  RMat out;
  for (auto& r : rows) out.push_back(rv(r));
  return out;
}

ConeMap lin(RMat a) {
  const int n = static_cast<int>(a.size());
  return ConeMap::linear(std::move(a), PolyhedralCone::orthant(n));
}

std::vector<ConeMap> min_of_linear_instances() {
  const PolyhedralCone q2 = PolyhedralCone::orthant(2);
  const PolyhedralCone q3 = PolyhedralCone::orthant(3);
  std::vector<ConeMap> out;
  out.push_back(ConeMap::min_of_linear({rm({{3, 1}, {1, 3}}), rm({{2, 2}, {2, 2}})}, q2));
  out.push_back(ConeMap::min_of_linear({rm({{4, 1}, {2, 3}}), rm({{3, 2}, {1, 4}})}, q2));
  out.push_back(ConeMap::min_of_linear({rm({{5, 2}, {1, 4}}), rm({{4, 3}, {2, 3}})}, q2));
  out.push_back(ConeMap::min_of_linear(
      {rm({{3, 1, 1}, {1, 3, 1}, {1, 1, 3}}), rm({{2, 2, 2}, {2, 2, 2}, {2, 2, 2}})}, q3));
  out.push_back(ConeMap::min_of_linear(
      {rm({{4, 1, 2}, {1, 4, 1}, {2, 1, 4}}), rm({{3, 2, 2}, {2, 3, 2}, {2, 2, 3}})}, q3));
  return out;
}

std::vector<ConeMap> chain_suite() {
  std::mt19937_64 rng(2024);
  std::vector<ConeMap> suite;
  for (int k = 0; k < 8; ++k) suite.push_back(lin(oracles::random_positive_matrix(rng, 2)));
  for (int k = 0; k < 6; ++k) suite.push_back(lin(oracles::random_positive_matrix(rng, 3)));
  suite.push_back(build_example1());
  for (ConeMap& m : min_of_linear_instances()) suite.push_back(std::move(m));
  return suite;
}

// criterion 1: exact refutation within its runtime budget
void criterion_refutation() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    RefutationOptions opts;
    opts.case_samples_per_config = 12000;  // 9 configurations: 108000 pairs
    opts.boundary_samples = 1200;
    opts.seed = 7;
    const RefutationReport r = refutation_report(opts);
    ok = ok && r.case_analysis.total_samples >= 100000;
    ok = ok && r.case_analysis.cases.size() == 9;
    ok = ok && r.case_analysis.total_violations == 0;
    ok = ok && r.strictly_order_preserving;
    ok = ok && r.boundary_samples >= 1000 && r.strongly_positive;
    ok = ok && r.eigenvector_certificates.size() == 4 && r.multiple_unit_eigenvectors;
    for (const Certificate& c : r.eigenvector_certificates) ok = ok && c.holds;
    ok = ok && r.eigencone_dimension == 2;
    ok = ok && r.uniqueness_refuted && r.simplicity_refuted;
    const double dt = seconds_since(t0);
    ok = ok && dt <= 10.0;
    std::ostringstream os;
    os << r.case_analysis.total_samples << " pairs, " << r.boundary_samples
       << " boundary samples, " << dt << " s";
    detail = os.str();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(1, "counterexample refutation, exact arithmetic", ok, detail);
}

// criterion 2: spectral chain on the suite + linear power iteration vs Perron oracle
void criterion_spectral_chain() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    const std::vector<ConeMap> suite = chain_suite();
    ok = suite.size() >= 20;
    const double chain_tol = 1e-2;
    for (const ConeMap& map : suite) {
      const SpectralReport rep = spectral_report(map, 64, 192, 5);
      double mu_max = 0.0;
      for (const auto& [id, est] : rep.local_mu) mu_max = std::max(mu_max, est.value);
      ok = ok && rep.eigen_radius_found;
      ok = ok && rep.eigen_radius.value <= mu_max + chain_tol;
      ok = ok && mu_max <= rep.bonsall.estimate.value + chain_tol;
      if (auto a = map.linear_collapse()) {
        const double oracle = oracles::perron_root(to_eigen(*a));
        const auto pi = power_iteration(map, to_eigen(map.domain().interior_point()), 5000,
                                        1e-13);
        ok = ok && pi.has_value() && std::abs(pi->lambda - oracle) <= 1e-8;
      }
    }
    const double dt = seconds_since(t0);
    ok = ok && dt <= 60.0;
    std::ostringstream os;
    os << suite.size() << " maps, " << dt << " s";
    detail = os.str();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(2, "spectral chain r_hat <= mu_max <= bonsall at 1e-2, power iteration vs Perron oracle",
         ok, detail);
}

// criterion 3: counterexample spectral values
void criterion_counterexample_spectral() {
  bool ok = true;
  std::string detail;
  try {
    const ConeMap map = build_example1();
    const BonsallResult bon = bonsall_radius(map, 64, 256, 3);
    ok = ok && std::abs(bon.estimate.value - 3.0) <= 1e-3;

    const PwlEigenReport oracle = enumerate_eigenpairs_pwl(map);
    ok = ok && oracle.r_hat_found && oracle.exact && oracle.r_hat == 3.0;

    const auto low = power_iteration(map, Eigen::Vector2d(1, 0), 1000, 1e-12);
    const auto up = power_iteration(map, Eigen::Vector2d(0, 1), 1000, 1e-12);
    const double s5 = std::sqrt(5.0);
    ok = ok && low.has_value() &&
         (low->x - Eigen::Vector2d(2 / s5, 1 / s5)).norm() <= 1e-10;
    ok = ok && up.has_value() && (up->x - Eigen::Vector2d(1 / s5, 2 / s5)).norm() <= 1e-10;
    std::ostringstream os;
    os << "bonsall=" << bon.estimate.value << ", r_hat=" << oracle.r_hat;
    detail = os.str();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(3, "counterexample spectral values (bonsall 3+-1e-3, exact r_hat 3, fixed rays)", ok,
         detail);
}

// criterion 4: support reduction vs the brute beta grid, 100% agreement
void criterion_reduction_vs_grid() {
  bool ok = true;
  long points = 0, agreements = 0;
  std::string detail;
  try {
    std::mt19937_64 rng(77);
    std::vector<ConeMap> suite;
    suite.push_back(build_example1());
    suite.push_back(lin(rm({{1, 0}, {0, 1}})));
    suite.push_back(lin(rm({{2, 1}, {1, 2}})));
    suite.push_back(lin(rm({{1, 1}, {0, 1}})));
    suite.push_back(lin(rm({{2, 0}, {0, 3}})));
    for (int k = 0; k < 3; ++k)
      suite.push_back(lin(oracles::random_positive_matrix(rng, 3, 1, 5)));
    for (ConeMap& m : min_of_linear_instances()) suite.push_back(std::move(m));

    for (const ConeMap& map : suite) {
      const PolyhedralCone& cone = map.domain();
      for (int k = 0; k < 60; ++k) {
        const int f = static_cast<int>(rng() % cone.facet_normals().size());
        if (cone.facet_generator_indices(f).empty()) continue;
        const RVec d = cone.sample_boundary_rational(rng, f);
        const RVec image = map.apply_exact(d);
        ++points;
        if (support_reduction(cone, d, image).violated ==
            oracles::brute_beta_grid(cone, d, image))
          ++agreements;
        const RVec y = cone.sample_rational(rng);
        const RVec w = rsub(map.apply_exact(radd(y, d)), map.apply_exact(y));
        ++points;
        if (support_reduction(cone, d, w).violated == oracles::brute_beta_grid(cone, d, w))
          ++agreements;
      }
    }
    ok = points >= 1000 && agreements == points;
    std::ostringstream os;
    os << agreements << "/" << points << " agreements across " << suite.size() << " maps";
    detail = os.str();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(4, "B1/B2 support reduction agrees with the beta-grid brute test", ok, detail);
}

// criterion 5: uniqueness/simplicity properties and the contrapositive
void criterion_uniqueness_simplicity() {
  bool ok = true;
  std::string detail;
  try {
    std::mt19937_64 rng(99);
    const std::vector<ConeMap> suite = chain_suite();
    for (const ConeMap& map : suite) {
      if (map.kind() == ConeMap::Kind::piecewise) continue;  // handled below
      HypothesisVerdict b1 = check_B1(map, 256, 9);
      const PwlEigenReport oracle = enumerate_eigenpairs_pwl(map);
      if (b1.passed() && !oracle.pairs.empty()) {
        for (const EigenPair& p : oracle.pairs) {
          ok = ok && std::abs(p.lambda - oracle.pairs[0].lambda) <=
                         1e-12 * std::max(1.0, std::abs(p.lambda));
          ok = ok && p.location == EigenPair::Location::interior;
        }
        for (int k = 0; k < 32; ++k) {
          const RVec x = map.domain().sample_rational(rng);
          if (!map.domain().interior_contains_exact(x)) continue;
          ok = ok && map.domain().interior_contains_exact(map.apply_exact(x));
        }
      }
      if (check_B2(map, 256, 9).passed() && !oracle.pairs.empty()) {
        for (std::size_t i = 0; i < oracle.pairs.size(); ++i)
          for (std::size_t j = i + 1; j < oracle.pairs.size(); ++j)
            if (std::abs(oracle.pairs[i].lambda - oracle.pairs[j].lambda) < 1e-9)
              ok = ok &&
                   std::abs(oracle.pairs[i].x.dot(oracle.pairs[j].x)) > 1.0 - 1e-8;
      }
    }
    // contrapositive on the counterexample: B2 fails and the eigencone is flat
    const ConeMap example = build_example1();
    ok = ok && check_B2(example, 256, 9).verdict == Verdict::fail;
    const PwlEigenReport ex_oracle = enumerate_eigenpairs_pwl(example);
    ok = ok && ex_oracle.eigencones.size() == 1 && ex_oracle.eigencones[0].dimension == 2;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(5, "B1 => singleton interior spectrum, B2 => simple ray, contrapositive on the builtin",
         ok, detail);
}

// criterion 6: superadditive corollary on min-of-linear instances
void criterion_superadditive() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  int analyzed = 0;
  try {
    for (const ConeMap& map : min_of_linear_instances()) {
      const SuperadditiveAnalysis sa = analyze_superadditive(map, 50, 21);
      ok = ok && sa.b1.passed();
      ok = ok && sa.pair_minus.lambda >= sa.pair_plus.lambda - 1e-9;
      ok = ok && sa.bound_ok;
      ok = ok && sa.uniqueness_checked && sa.uniqueness_ok;
      ok = ok && sa.multistart_converged >= 50;
      ok = ok && sa.multistart_max_deviation <= 1e-8;
      ++analyzed;
    }
    const double dt = seconds_since(t0);
    ok = ok && analyzed >= 5 && dt <= 60.0;
    std::ostringstream os;
    os << analyzed << " instances, " << dt << " s";
    detail = os.str();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(6, "superadditive corollary: ordering, off-cone bound, multistart uniqueness", ok,
         detail);
}

// criterion 7: finite-horizon growth bound
void criterion_growth() {
  bool ok = true;
  std::string detail;
  try {
    const Eigen::Vector2d ones(1, 1), zero2(0, 0);
    const Eigen::Vector2d e1(1, 0);
    struct Instance {
      ConeMap map;
      Eigen::VectorXd u;
      double M;
      int p;
      double eps;
    };
    std::vector<Instance> instances;
    instances.push_back({lin(rm({{2, 1}, {1, 2}})), ones, 1.0, 1, 0.5});
    instances.push_back({build_example1(), ones, 1.0, 1, 1.0});
    instances.push_back({lin(rm({{3, 0}, {0, 2}})), e1, 1.0, 1, 0.25});
    for (const Instance& inst : instances) {
      const Eigen::VectorXd w = Eigen::VectorXd::Zero(2);
      const HypothesisVerdict a1 = check_A1(inst.map, inst.u, inst.u, w, inst.M, inst.p);
      ok = ok && a1.verdict == Verdict::pass_certified;
      const HypothesisVerdict growth =
          orbit_growth_check(inst.map, inst.u, inst.u, w, inst.M, inst.p, inst.eps, 20);
      ok = ok && growth.verdict == Verdict::pass_certified;
      // independent componentwise verification of the bound at every k
      const double alpha = std::pow(inst.M + inst.eps, 1.0 / inst.p);
      Eigen::VectorXd z = inst.u;
      for (int k = 1; k <= 20; ++k) {
        for (int s = 0; s < inst.p; ++s) z = alpha * inst.map.apply(z);
        const double factor = std::pow(1.0 + inst.eps / inst.M, k);
        for (Eigen::Index i = 0; i < z.size(); ++i)
          ok = ok && z[i] >= factor * inst.u[i] - 1e-9 * z.norm();
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(7, "growth bound S^{kp}(v) >= (1+eps/M)^k u verified for k = 1..20 on 3 instances", ok,
         detail);
}

// criterion 8: byte-identical reports for identical config and seed
void criterion_determinism() {
  bool ok = true;
  std::string detail;
  try {
    RunConfig config;
    config.builtin = kBuiltinCounterexample;
    config.analyses = {"spectral", "hypotheses", "case_analysis", "counterexample"};
    config.seed = 31;
    config.budget = 300;
    config.n_max = 64;
    config.expected_failures = {"B2", "SSI"};

    const RunResult a = run(config);
    const RunResult b = run(config);
    ok = a.exit_code == 0 && b.exit_code == 0;
    ok = ok && a.reports.size() == 4;
    for (const auto& [name, rep] : a.reports)
      ok = ok && b.reports.count(name) == 1 && rep.dump() == b.reports.at(name).dump();

#ifdef CONESPEC_CLI_PATH
    // the actual binary, twice, with file-level byte comparison
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "conespec_acceptance";
    fs::remove_all(tmp);
    const std::string base = std::string(CONESPEC_CLI_PATH) +
                             " --builtin mahadevan_counterexample"
                             " --analyses spectral,hypotheses --seed 31 --budget 200"
                             " --expected-failures B2,SSI --output ";
    const fs::path run1 = tmp / "run1", run2 = tmp / "run2";
    ok = ok && std::system((base + run1.string() + " > /dev/null").c_str()) == 0;
    ok = ok && std::system((base + run2.string() + " > /dev/null").c_str()) == 0;
    int files = 0;
    if (ok) {
      for (const auto& entry : fs::directory_iterator(run1)) {
        std::ifstream f1(entry.path(), std::ios::binary);
        std::ifstream f2(run2 / entry.path().filename(), std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        ok = ok && !s1.str().empty() && s1.str() == s2.str();
        ++files;
      }
      ok = ok && files >= 2;
    }
    std::ostringstream os;
    os << "in-process reports identical; " << files << " CLI report files byte-identical";
    detail = os.str();
#endif
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(8, "identical seed and config produce byte-identical reports", ok, detail);
}

}  // namespace

int main() {
  criterion_refutation();
  criterion_spectral_chain();
  criterion_counterexample_spectral();
  criterion_reduction_vs_grid();
  criterion_uniqueness_simplicity();
  criterion_superadditive();
  criterion_growth();
  criterion_determinism();
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
