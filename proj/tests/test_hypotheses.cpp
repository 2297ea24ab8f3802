#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conespec/counterexample.hpp"
#include "conespec/hypotheses.hpp"
#include "conespec/spectral.hpp"
#include "support/oracles.hpp"

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

Rational dyadic(double x) { return Rational(x); }

}  // namespace

TEST_CASE("A1 clauses") {
  const Eigen::Vector2d ones(1, 1), zero(0, 0);
  CHECK(check_A1(build_example1(), ones, ones, zero, 1.0, 1).verdict ==
        Verdict::pass_certified);

  const HypothesisVerdict nil =
      check_A1(lin(rm({{0, 1}, {0, 0}})), Eigen::Vector2d(0, 1), Eigen::Vector2d(0, 1), zero,
               1.0, 2);
  CHECK(nil.verdict == Verdict::fail);
  CHECK(nil.detail == "M T^p(u) does not dominate u");

  const HypothesisVerdict zerou = check_A1(build_example1(), zero, zero, zero, 1.0, 1);
  CHECK(zerou.verdict == Verdict::fail);
  CHECK(zerou.detail == "u != 0 violated");
}

TEST_CASE("A2 orbit surrogate") {
  CHECK(check_A2_orbit(lin(rm({{2, 0}, {0, 2}})), Eigen::Vector2d(1, 1), 1e6, 64).verdict ==
        Verdict::pass_sampled);

  ConeMap half = ConeMap::scaled(Rational(1) / 2, lin(rm({{1, 0}, {0, 1}})));
  CHECK(check_A2_orbit(half, Eigen::Vector2d(1, 1), 1e6, 128).verdict == Verdict::fail);

  CHECK(check_A2_orbit(build_example1(), Eigen::Vector2d(1, 0), 1e6, 64).verdict ==
        Verdict::pass_sampled);

  // an isometry neither blows up nor converges: undetermined
  CHECK(check_A2_orbit(lin(rm({{0, 1}, {1, 0}})), Eigen::Vector2d(2, 1), 1e6, 64).verdict ==
        Verdict::unknown);
}

TEST_CASE("B1") {
  CHECK(check_B1(build_example1(), 512, 3).passed());

  const HypothesisVerdict id_fail = check_B1(lin(rm({{1, 0}, {0, 1}})), 512, 3);
  REQUIRE(id_fail.verdict == Verdict::fail);
  REQUIRE(id_fail.witness_x_exact.has_value());
  REQUIRE(id_fail.beta.has_value());
  {  // witness re-verifies exactly: x - beta*T(x) is a cone member
    const RVec& x = *id_fail.witness_x_exact;
    const RVec img = x;  // identity
    CHECK(PolyhedralCone::orthant(2).contains_exact(rsub(x, rscale(dyadic(*id_fail.beta), img))));
  }

  const HypothesisVerdict shear_fail = check_B1(lin(rm({{1, 1}, {0, 1}})), 512, 3);
  REQUIRE(shear_fail.verdict == Verdict::fail);
  CHECK(operator_eq(*shear_fail.witness_x_exact, rv({1, 0})));

  CHECK_THROWS_AS(check_B1(lin(rm({{1, -1}, {0, 1}})), 64, 3), std::invalid_argument);
}

TEST_CASE("B2") {
  CHECK(check_B2(lin(rm({{2, 1}, {1, 2}})), 512, 3).passed());

  const HypothesisVerdict id_fail = check_B2(lin(rm({{1, 0}, {0, 1}})), 512, 3);
  REQUIRE(id_fail.verdict == Verdict::fail);
  REQUIRE(id_fail.witness_x_exact.has_value());
  REQUIRE(id_fail.witness_y_exact.has_value());

  const ConeMap example = build_example1();
  const HypothesisVerdict ex_fail = check_B2(example, 512, 3);
  REQUIRE(ex_fail.verdict == Verdict::fail);
  {  // witness re-verifies exactly
    const RVec& x = *ex_fail.witness_x_exact;
    const RVec& y = *ex_fail.witness_y_exact;
    const RVec d = rsub(x, y);
    const RVec w = rsub(example.apply_exact(x), example.apply_exact(y));
    CHECK(example.domain().on_boundary_exact(d));
    CHECK(PolyhedralCone::orthant(2).contains_exact(rsub(d, rscale(dyadic(*ex_fail.beta), w))));
  }

  // the hand-derived violating pair: x, y in the middle sector, difference on
  // the boundary, image difference 3*(x - y)
  {
    const RVec x = rv({1, 2}), y = rv({1, 1});
    const RVec d = rsub(x, y);
    const RVec w = rsub(example.apply_exact(x), example.apply_exact(y));
    CHECK(operator_eq(w, rscale(Rational(3), d)));
    const SupportReduction red = support_reduction(example.domain(), d, w);
    CHECK(red.violated);
    REQUIRE(red.beta_sup.has_value());
    CHECK(*red.beta_sup == Rational(1) / 3);
  }
}

TEST_CASE("SSP and SSI") {
  CHECK(check_SSP(build_example1(), 512, 3).passed());
  CHECK(check_SSI(build_example1(), 512, 3).verdict == Verdict::fail);

  const HypothesisVerdict id_ssp = check_SSP(lin(rm({{1, 0}, {0, 1}})), 512, 3);
  REQUIRE(id_ssp.verdict == Verdict::fail);
  CHECK(operator_eq(*id_ssp.witness_x_exact, rv({1, 0})));

  CHECK(check_SSI(lin(rm({{2, 1}, {1, 2}})), 512, 3).passed());
}

TEST_CASE("implication audit") {
  const ImplicationAuditReport example = implication_audit(build_example1(), 512, 3);
  CHECK(example.ssp.passed());
  CHECK(example.b1.passed());
  CHECK(example.b2.verdict == Verdict::fail);
  CHECK(example.ssi.verdict == Verdict::fail);
  CHECK(example.consistent);

  const ImplicationAuditReport pos = implication_audit(lin(rm({{2, 1}, {1, 2}})), 512, 3);
  CHECK(pos.ssp.passed());
  CHECK(pos.b1.passed());
  CHECK(pos.b2.passed());
  CHECK(pos.ssi.passed());
  CHECK(pos.superadditive_certified);
  CHECK(pos.consistent);

  const ImplicationAuditReport id = implication_audit(lin(rm({{1, 0}, {0, 1}})), 512, 3);
  CHECK(id.ssp.verdict == Verdict::fail);
  CHECK(id.b1.verdict == Verdict::fail);
  CHECK(id.b2.verdict == Verdict::fail);
  CHECK(id.ssi.verdict == Verdict::fail);
  CHECK(id.consistent);
}

TEST_CASE("support reduction agrees with the brute beta grid") {
  std::mt19937_64 rng(47);
  std::vector<ConeMap> suite;
  suite.push_back(build_example1());
  suite.push_back(lin(rm({{1, 0}, {0, 1}})));
  suite.push_back(lin(rm({{2, 1}, {1, 2}})));
  suite.push_back(lin(rm({{1, 1}, {0, 1}})));
  for (int k = 0; k < 3; ++k) suite.push_back(lin(oracles::random_positive_matrix(rng, 3, 1, 5)));
  suite.push_back(ConeMap::min_of_linear({rm({{3, 1}, {1, 3}}), rm({{2, 2}, {2, 2}})},
                                         PolyhedralCone::orthant(2)));

  for (const ConeMap& map : suite) {
    const PolyhedralCone& cone = map.domain();
    for (int k = 0; k < 120; ++k) {
      const int f = static_cast<int>(rng() % cone.facet_normals().size());
      if (cone.facet_generator_indices(f).empty()) continue;
      const RVec d = cone.sample_boundary_rational(rng, f);
      // point form (B1 shape)
      const RVec image = map.apply_exact(d);
      const SupportReduction red = support_reduction(cone, d, image);
      CHECK(red.violated == oracles::brute_beta_grid(cone, d, image));
      // pair form (B2 shape)
      const RVec y = cone.sample_rational(rng);
      const RVec w = rsub(map.apply_exact(radd(y, d)), map.apply_exact(y));
      const SupportReduction red2 = support_reduction(cone, d, w);
      CHECK(red2.violated == oracles::brute_beta_grid(cone, d, w));
    }
  }
}

TEST_CASE("singleton spectrum and interior eigenvectors under B1") {
  std::mt19937_64 rng(53);
  std::vector<ConeMap> suite;
  suite.push_back(lin(rm({{2, 1}, {1, 2}})));
  suite.push_back(lin(rm({{3, 1}, {2, 2}})));
  for (int k = 0; k < 3; ++k) suite.push_back(lin(oracles::random_positive_matrix(rng, 3)));
  suite.push_back(ConeMap::min_of_linear({rm({{3, 1}, {1, 3}}), rm({{2, 2}, {2, 2}})},
                                         PolyhedralCone::orthant(2)));

  for (const ConeMap& map : suite) {
    const HypothesisVerdict b1 = check_B1(map, 256, 3);
    const PwlEigenReport oracle = enumerate_eigenpairs_pwl(map);
    if (!b1.passed() || oracle.pairs.empty()) continue;
    for (const EigenPair& p : oracle.pairs) {
      CHECK(std::abs(p.lambda - oracle.pairs[0].lambda) <= 1e-12 * std::max(1.0, p.lambda));
      CHECK(p.location == EigenPair::Location::interior);
    }
    // T maps interior points to interior points
    for (int k = 0; k < 64; ++k) {
      const RVec x = map.domain().sample_rational(rng);
      if (!map.domain().interior_contains_exact(x)) continue;
      CHECK(map.domain().interior_contains_exact(map.apply_exact(x)));
    }
  }
}

TEST_CASE("simple eigencone under B2, two-dimensional eigencone without it") {
  // B2 pass: the eigenvalue's eigencone is one ray
  const ConeMap sym = lin(rm({{2, 1}, {1, 2}}));
  REQUIRE(check_B2(sym, 256, 3).passed());
  const PwlEigenReport sym_oracle = enumerate_eigenpairs_pwl(sym);
  for (std::size_t i = 0; i < sym_oracle.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < sym_oracle.pairs.size(); ++j)
      if (std::abs(sym_oracle.pairs[i].lambda - sym_oracle.pairs[j].lambda) < 1e-9)
        CHECK(std::abs(sym_oracle.pairs[i].x.dot(sym_oracle.pairs[j].x)) > 1.0 - 1e-8);

  // the contrapositive on the three-sector map: B2 fails, eigencone dimension 2
  const ConeMap example = build_example1();
  CHECK(check_B2(example, 256, 3).verdict == Verdict::fail);
  const PwlEigenReport ex_oracle = enumerate_eigenpairs_pwl(example);
  REQUIRE(ex_oracle.eigencones.size() == 1);
  CHECK(ex_oracle.eigencones[0].dimension == 2);
}
