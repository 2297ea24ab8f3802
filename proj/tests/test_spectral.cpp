#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conespec/counterexample.hpp"
#include "conespec/spectral.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace conespec;

namespace {

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

const double kInvSqrt5 = 1.0 / std::sqrt(5.0);

}  // namespace

TEST_CASE("cone norm") {
  CHECK(cone_norm(lin(rm({{3, 0}, {0, 3}}))).value == doctest::Approx(3.0).epsilon(1e-12));

  const Estimate ex = cone_norm(build_example1(), 512, 2);
  CHECK(ex.value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(ex.method == "exact");  // scaled-identity and rank-one sectors
  // the dense-grid oracle agrees
  CHECK(oracles::grid_cone_norm(build_example1()) == doctest::Approx(3.0).epsilon(1e-8));

  CHECK(cone_norm(lin(rm({{0, 0}, {0, 0}}))).value == doctest::Approx(0.0));
}

TEST_CASE("bonsall radius") {
  const BonsallResult sym = bonsall_radius(lin(rm({{2, 1}, {1, 2}})), 64, 256, 1);
  CHECK(std::abs(sym.estimate.value - 3.0) <= 1e-6);
  CHECK(sym.sequence.size() == 64);

  const BonsallResult ex = bonsall_radius(build_example1(), 64, 256, 1);
  CHECK(std::abs(ex.estimate.value - 3.0) <= 1e-3);

  CHECK(bonsall_radius(lin(rm({{0, 0}, {0, 0}})), 16, 32, 1).estimate.value == 0.0);
}

TEST_CASE("bonsall radius is scale equivariant") {
  const ConeMap base = lin(rm({{2, 1}, {1, 2}}));
  const double b1 = bonsall_radius(base, 64, 128, 1).estimate.value;
  for (double c : {0.5, 2.0}) {
    const ConeMap scaled = ConeMap::scaled(Rational(c), base);
    const double bc = bonsall_radius(scaled, 64, 128, 1).estimate.value;
    CHECK(std::abs(bc - c * b1) <= 1e-6 * std::max(1.0, c * b1));
  }
}

TEST_CASE("local growth rate") {
  const ConeMap diag = lin(rm({{2, 0}, {0, 1}}));
  CHECK(local_mu(diag, Eigen::Vector2d(0, 1)).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(local_mu(diag, Eigen::Vector2d(1, 1)).value - 2.0) <= 1e-6);
  CHECK(local_mu(build_example1(), Eigen::Vector2d(1, 1)).value ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(local_mu(diag, Eigen::Vector2d(0, 0)), std::invalid_argument);
}

TEST_CASE("power iteration") {
  const auto sym = power_iteration(lin(rm({{2, 1}, {1, 2}})), Eigen::Vector2d(1, 0));
  REQUIRE(sym.has_value());
  CHECK(std::abs(sym->lambda - 3.0) <= 1e-8);
  CHECK((sym->x - Eigen::Vector2d(1, 1).normalized()).norm() <= 1e-8);
  CHECK(sym->location == EigenPair::Location::interior);

  const auto low = power_iteration(build_example1(), Eigen::Vector2d(1, 0));
  REQUIRE(low.has_value());
  CHECK(std::abs(low->lambda - 3.0) <= 1e-10);
  CHECK((low->x - Eigen::Vector2d(2 * kInvSqrt5, kInvSqrt5)).norm() <= 1e-10);

  const auto up = power_iteration(build_example1(), Eigen::Vector2d(0, 1));
  REQUIRE(up.has_value());
  CHECK((up->x - Eigen::Vector2d(kInvSqrt5, 2 * kInvSqrt5)).norm() <= 1e-10);

  CHECK_THROWS_WITH_AS(power_iteration(lin(rm({{0, 1}, {0, 0}})), Eigen::Vector2d(0, 1)),
                       doctest::Contains("kernel"), std::runtime_error);
}

TEST_CASE("power iteration residual certificate re-verifies") {
  const ConeMap map = lin(rm({{2, 1}, {1, 2}}));
  const auto pair = power_iteration(map, Eigen::Vector2d(1, 0));
  REQUIRE(pair.has_value());
  CHECK((map.apply(pair->x) - pair->lambda * pair->x).norm() <=
        std::max(pair->residual, 1e-15) + 1e-15);
  CHECK(pair->residual <= 1e-10 * pair->lambda);
}

TEST_CASE("piecewise eigen oracle on the three-sector map") {
  const PwlEigenReport report = enumerate_eigenpairs_pwl(build_example1());
  REQUIRE(report.eigencones.size() == 1);
  CHECK(report.eigencones[0].dimension == 2);
  CHECK(report.eigencones[0].exact_lambda == Rational(3));
  CHECK(report.r_hat == 3.0);  // exact rational path: no tolerance
  CHECK(report.r_hat_found);
  CHECK(report.exact);

  // the middle sector's rays and interior representative, all with lambda 3
  REQUIRE(report.pairs.size() >= 3);
  bool saw_low_ray = false, saw_up_ray = false, saw_interior = false;
  for (const EigenPair& p : report.pairs) {
    CHECK(p.exact);
    CHECK(*p.exact_lambda == Rational(3));
    REQUIRE(p.exact_ray.has_value());
    const RVec& r = *p.exact_ray;
    CHECK(r[0] <= 2 * r[1]);  // inside the middle sector
    CHECK(r[1] <= 2 * r[0]);
    CHECK(operator_eq(build_example1().apply_exact(r), rscale(Rational(3), r)));
    saw_low_ray = saw_low_ray || same_ray(r, rv({2, 1}));
    saw_up_ray = saw_up_ray || same_ray(r, rv({1, 2}));
    saw_interior = saw_interior || p.location == EigenPair::Location::interior;
  }
  CHECK(saw_low_ray);
  CHECK(saw_up_ray);
  CHECK(saw_interior);

  // three interior probes of the eigencone, certified directly
  for (const RVec& probe : {rv({1, 1}), rv({3, 2}), rv({2, 3})})
    CHECK(operator_eq(build_example1().apply_exact(probe), rscale(Rational(3), probe)));
}

TEST_CASE("eigen oracle on linear maps") {
  const PwlEigenReport sym = enumerate_eigenpairs_pwl(lin(rm({{2, 1}, {1, 2}})));
  REQUIRE(sym.pairs.size() == 1);  // eigenvalue 1 has eigenvector (1,-1), outside the cone
  CHECK(sym.pairs[0].lambda == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sym.r_hat == doctest::Approx(3.0).epsilon(1e-12));

  const PwlEigenReport perm = enumerate_eigenpairs_pwl(lin(rm({{0, 1}, {1, 0}})));
  REQUIRE(perm.pairs.size() == 1);
  CHECK(perm.pairs[0].lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((perm.pairs[0].x - Eigen::Vector2d(1, 1).normalized()).norm() <= 1e-9);

  std::mt19937_64 rng(1);
  CHECK_THROWS_WITH_AS(enumerate_eigenpairs_pwl(lin(oracles::random_positive_matrix(rng, 4))),
                       doctest::Contains("low dimension"), std::invalid_argument);
}

TEST_CASE("region sweep labels strata") {
  const auto all = enumerate_eigenpairs_regions(lin(rm({{2, 1}, {1, 2}})));
  bool saw_plus = false, saw_off = false;
  for (const RegionEigenPair& p : all) {
    if (p.stratum == RegionEigenPair::Stratum::cone_plus &&
        std::abs(p.lambda - 3.0) < 1e-9)
      saw_plus = true;
    if (p.stratum == RegionEigenPair::Stratum::off_cone && std::abs(p.lambda - 1.0) < 1e-9)
      saw_off = true;
  }
  CHECK(saw_plus);
  CHECK(saw_off);
}

TEST_CASE("orbit growth check") {
  const ConeMap sym = lin(rm({{2, 1}, {1, 2}}));
  const Eigen::Vector2d ones(1, 1), zero(0, 0);
  const HypothesisVerdict pass = orbit_growth_check(sym, ones, ones, zero, 1.0, 1, 0.5, 20);
  CHECK(pass.verdict == Verdict::pass_certified);

  // independent componentwise oracle: iterate S = (M+eps)^{1/p} T directly
  {
    const double rate = 1.5;
    Eigen::Vector2d z = ones;
    for (int k = 1; k <= 20; ++k) {
      z = rate * sym.apply(z);
      const double bound = std::pow(1.5, k);
      CHECK(z[0] >= bound * ones[0] - 1e-9 * z.norm());
      CHECK(z[1] >= bound * ones[1] - 1e-9 * z.norm());
    }
  }

  CHECK_THROWS_WITH_AS(
      orbit_growth_check(lin(rm({{0, 0}, {0, 0}})), ones, ones, zero, 1.0, 1, 0.5, 20),
      doctest::Contains("dominate"), std::invalid_argument);

  const HypothesisVerdict ex =
      orbit_growth_check(build_example1(), ones, ones, zero, 1.0, 1, 1.0, 20);
  CHECK(ex.verdict == Verdict::pass_certified);
}

TEST_CASE("chain inequality holds across a small suite") {
  std::mt19937_64 rng(41);
  std::vector<ConeMap> suite;
  for (int k = 0; k < 4; ++k) suite.push_back(lin(oracles::random_positive_matrix(rng, 2)));
  for (int k = 0; k < 3; ++k) suite.push_back(lin(oracles::random_positive_matrix(rng, 3)));
  suite.push_back(build_example1());
  suite.push_back(ConeMap::min_of_linear({rm({{3, 1}, {1, 3}}), rm({{2, 2}, {2, 2}})},
                                         PolyhedralCone::orthant(2)));

  for (const ConeMap& map : suite) {
    const SpectralReport report = spectral_report(map, 64, 128, 13);
    double mu_max = 0.0;
    for (const auto& [id, est] : report.local_mu) mu_max = std::max(mu_max, est.value);
    REQUIRE(report.eigen_radius_found);
    CHECK(report.eigen_radius.value <= mu_max + report.chain_tol);
    CHECK(mu_max <= report.bonsall.estimate.value + report.chain_tol);
    CHECK(report.chain_consistent);
  }
}
