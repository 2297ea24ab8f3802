#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conespec/counterexample.hpp"

#include <random>

using namespace conespec;

namespace {

RVec rv(std::initializer_list<long long> vals) {
  RVec out;
  for (long long v : vals) out.emplace_back(v);
  return out;
}

RVec rq(long long pn, long long pd, long long qn, long long qd) {
  return {Rational(pn) / pd, Rational(qn) / qd};
}

}  // namespace

TEST_CASE("construction and region ties") {
  const ConeMap map = build_example1();
  CHECK(operator_eq(map.apply_exact(rv({1, 0})), rv({2, 1})));
  CHECK(operator_eq(map.apply_exact(rv({2, 1})), rv({6, 3})));
  CHECK(operator_eq(map.apply_exact(rv({1, 1})), rv({3, 3})));
  CHECK(operator_eq(map.apply_exact(rv({1, 2})), rv({3, 6})));

  CHECK(example1_region(rv({2, 1})) == Example1Region::middle);  // tie ray belongs to the middle
  CHECK(example1_region(rv({1, 2})) == Example1Region::middle);
  CHECK(example1_region(rv({5, 1})) == Example1Region::lower);
  CHECK(example1_region(rv({1, 5})) == Example1Region::upper);
}

TEST_CASE("explicit cross-sector pairs") {
  const ConeMap map = build_example1();
  // lower < upper: x = (1, 1/4), y = (1, 3)
  {
    const RVec x = rq(1, 1, 1, 4), y = rv({1, 3});
    CHECK(example1_region(x) == Example1Region::lower);
    CHECK(example1_region(y) == Example1Region::upper);
    const RVec tx = map.apply_exact(x), ty = map.apply_exact(y);
    CHECK(operator_eq(tx, rq(5, 2, 5, 4)));
    CHECK(operator_eq(ty, rv({4, 8})));
    CHECK(ty[0] - tx[0] > 0);
    CHECK(ty[1] - tx[1] > 0);
  }
  // same sector, middle: x = (1,1), y = (2,2)
  {
    const RVec tx = map.apply_exact(rv({1, 1})), ty = map.apply_exact(rv({2, 2}));
    CHECK(operator_eq(tx, rv({3, 3})));
    CHECK(operator_eq(ty, rv({6, 6})));
  }
  // lower < middle: x = (1, 1/4), y = (2, 3/2)
  {
    const RVec x = rq(1, 1, 1, 4), y = rq(2, 1, 3, 2);
    CHECK(example1_region(y) == Example1Region::middle);
    const RVec tx = map.apply_exact(x), ty = map.apply_exact(y);
    CHECK(operator_eq(tx, rq(5, 2, 5, 4)));
    CHECK(operator_eq(ty, rq(6, 1, 9, 2)));
    CHECK(ty[0] - tx[0] > 0);
    CHECK(ty[1] - tx[1] > 0);
  }
}

TEST_CASE("case analysis finds no violations and covers all nine configurations") {
  const CaseAnalysisReport report = verify_case_analysis(400, 7);
  CHECK(report.cases.size() == 9);
  for (const CasePairStats& s : report.cases) {
    CHECK(s.samples == 400);
    CHECK(s.violations == 0);
  }
  CHECK(report.total_samples == 9 * 400);
  CHECK(report.total_violations == 0);
  CHECK(report.chains_verified);
  CHECK(report.all_strict);
}

TEST_CASE("eigencone characterization on sampled points") {
  const ConeMap map = build_example1();
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> num(0, 64);
  int middle_seen = 0, outer_seen = 0;
  while (middle_seen < 100 || outer_seen < 100) {
    const RVec x = {Rational(num(rng)) / 4, Rational(num(rng)) / 4};
    if (is_zero(x)) continue;
    const RVec tx = map.apply_exact(x);
    const Rational cross = x[0] * tx[1] - x[1] * tx[0];
    if (example1_region(x) == Example1Region::middle) {
      CHECK(operator_eq(tx, rscale(Rational(3), x)));
      ++middle_seen;
    } else {
      CHECK(cross != 0);  // image is not proportional: not an eigenvector
      ++outer_seen;
    }
  }
}

TEST_CASE("strict but not strong: boundary-direction pair inside the eigencone") {
  const ConeMap map = build_example1();
  const RVec x = rv({1, 1}), y = rv({1, 2});  // y - x = (0,1) on the quadrant boundary
  const RVec delta = rsub(map.apply_exact(y), map.apply_exact(x));
  CHECK(operator_eq(delta, rv({0, 3})));
  CHECK(map.domain().contains_exact(delta));
  CHECK_FALSE(map.domain().interior_contains_exact(delta));  // strictly, not strongly
}

TEST_CASE("sector family generalizes the construction") {
  // the slope-2, eigenvalue-3 member is the fixed map
  const ConeMap base = build_sector_family(Rational(2), Rational(3));
  CHECK(operator_eq(base.apply_exact(rv({1, 0})), rv({2, 1})));
  CHECK(operator_eq(base.apply_exact(rv({1, 1})), rv({3, 3})));

  // a different slope: the shared rays are still exact eigenrays
  const Rational k = Rational(5) / 2;
  const ConeMap wide = build_sector_family(k, Rational(3));
  const RVec ray = {k, Rational(1)};
  CHECK(operator_eq(wide.apply_exact(ray), rscale(Rational(3), ray)));
  const RVec mid = rv({1, 1});
  CHECK(operator_eq(wide.apply_exact(mid), rv({3, 3})));

  CHECK_THROWS_AS(build_sector_family(Rational(1), Rational(3)), std::invalid_argument);
  CHECK_THROWS_AS(build_sector_family(Rational(2), Rational(0)), std::invalid_argument);
}

TEST_CASE("refutation report") {
  RefutationOptions opts;
  opts.case_samples_per_config = 1500;
  opts.boundary_samples = 400;
  opts.seed = 11;
  const RefutationReport report = refutation_report(opts);

  for (const Certificate& c : report.hypothesis_certificates) CHECK(c.holds);
  CHECK(report.strongly_positive);
  CHECK(report.strictly_order_preserving);
  CHECK(report.case_analysis.total_samples >= 9 * 1500);

  CHECK(report.eigenvector_certificates.size() == 4);  // three rays + distinctness
  for (const Certificate& c : report.eigenvector_certificates) CHECK(c.holds);
  CHECK(report.multiple_unit_eigenvectors);

  CHECK(report.eigencone_dimension == 2);
  CHECK(report.uniqueness_refuted);
  CHECK(report.simplicity_refuted);
  CHECK_FALSE(report.conclusion.empty());

  const std::string text = to_text(report);
  CHECK(text.find("uniqueness refuted: yes") != std::string::npos);
  CHECK(text.find("simplicity refuted: yes") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}
