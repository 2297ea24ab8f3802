#include "conespec/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conespec {

SupportReduction support_reduction(const PolyhedralCone& cone, const RVec& d, const RVec& image) {
  SupportReduction out;
  bool any_active = false;
  out.violated = true;
  for (std::size_t i = 0; i < cone.facet_normals().size(); ++i) {
    const RVec& a = cone.facet_normals()[i];
    const Rational ad = rdot(a, d);
    const Rational ai = rdot(a, image);
    if (ad == 0) {
      any_active = true;
      if (ai > 0) {
        out.violated = false;
        if (!out.witness_facet) out.witness_facet = static_cast<int>(i);
      }
    } else if (ai > 0) {
      const Rational bound = ad / ai;
      if (!out.beta_sup || bound < *out.beta_sup) out.beta_sup = bound;
    }
  }
  if (!any_active)
    throw std::invalid_argument("support_reduction: d is not on the cone boundary");
  if (!out.violated) out.beta_sup.reset();
  return out;
}

bool beta_grid_feasible(const PolyhedralCone& cone, const RVec& d, const RVec& image,
                        int* found_exponent) {
  for (int e = -20; e <= 4; ++e) {
    const Rational beta =
        e >= 0 ? Rational(1LL << e) : Rational(1) / Rational(1LL << (-e));
    if (cone.contains_exact(rsub(d, rscale(beta, image)))) {
      if (found_exponent) *found_exponent = e;
      return true;
    }
  }
  return false;
}

namespace {

double beta_as_double(const SupportReduction& r) {
  if (r.beta_sup) return to_double(*r.beta_sup) / 2.0;
  return 1.0;
}

void guard_grid_agreement(const PolyhedralCone& cone, const RVec& d, const RVec& image,
                          const SupportReduction& red) {
  int exponent = 0;
  const bool grid = beta_grid_feasible(cone, d, image, &exponent);
  if (grid && !red.violated)
    throw std::logic_error("hypothesis checker bug: beta-grid found a feasible beta "
                           "the support reduction missed");
  if (!grid && red.violated) {
    // the grid bottoms out at 2^-20; a smaller feasible interval is not a discrepancy
    const Rational floor = Rational(1) / Rational(1LL << 20);
    if (!red.beta_sup || *red.beta_sup >= floor)
      throw std::logic_error("hypothesis checker bug: support reduction found a feasible "
                             "beta the grid cannot confirm");
  }
}

/// Boundary sample plan: every facet's extreme rays first, then random points
/// on each boundary face until the budget is spent.
std::vector<RVec> boundary_samples(const PolyhedralCone& cone, int budget, std::mt19937_64& rng) {
  std::vector<RVec> samples;
  std::vector<int> usable;
  for (std::size_t f = 0; f < cone.facet_normals().size(); ++f) {
    for (int gi : cone.facet_generator_indices(static_cast<int>(f)))
      samples.push_back(cone.generators()[static_cast<std::size_t>(gi)]);
    if (!cone.facet_generator_indices(static_cast<int>(f)).empty())
      usable.push_back(static_cast<int>(f));
  }
  if (usable.empty()) return samples;
  const int per_facet = std::max(1, budget / static_cast<int>(usable.size()));
  for (int f : usable)
    for (int k = 0; k < per_facet; ++k) samples.push_back(cone.sample_boundary_rational(rng, f));
  return samples;
}

/// Exact certificate for linear maps on the orthant: a violation exists iff
/// some proper nonempty coordinate set S is closed under the column supports
/// (then x = sum of e_j over S admits a feasible beta).
std::optional<RVec> support_closed_subset(const RMat& a) {
  const int n = static_cast<int>(a.size());
  if (n > 16) return std::nullopt;
  for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
    bool closed = true;
    for (int j = 0; j < n && closed; ++j) {
      if (!(mask >> j & 1)) continue;
      for (int i = 0; i < n && closed; ++i)
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0 &&
            !(mask >> i & 1))
          closed = false;
    }
    if (closed) {
      RVec x(static_cast<std::size_t>(n), Rational(0));
      for (int j = 0; j < n; ++j)
        if (mask >> j & 1) x[static_cast<std::size_t>(j)] = 1;
      return x;
    }
  }
  return std::nullopt;
}

bool positivity_precondition(const ConeMap& map, unsigned seed) {
  const PositivityResult pos = classify_positivity(map, 128, seed);
  return pos.grade != PositivityGrade::not_positive;
}

enum class PairMode { point, pair };  // B1/SSP versus B2/SSI

HypothesisVerdict boundary_checker(const ConeMap& map, Hypothesis hyp, PairMode pm,
                                   bool require_witness_functional, int budget, unsigned seed) {
  const PolyhedralCone& cone = map.domain();

  // exact certificate for linear maps on the orthant; for linear maps the B2/SSI
  // condition depends only on the difference, so the same scan decides all four
  if (cone.tag() == PolyhedralCone::Tag::orthant) {
    if (auto a = map.linear_collapse()) {
      if (auto witness = support_closed_subset(*a)) {
        const SupportReduction red = support_reduction(cone, *witness, rmatvec(*a, *witness));
        guard_grid_agreement(cone, *witness, rmatvec(*a, *witness), red);
        HypothesisVerdict v;
        if (pm == PairMode::point) {
          v = make_fail(hyp, *witness, "support-closed coordinate set");
        } else {
          const RVec y(witness->size(), Rational(1));  // interior base point
          v = make_fail_pair(hyp, radd(y, *witness), y, "support-closed coordinate set");
        }
        v.beta = beta_as_double(red);
        return v;
      }
      return make_pass(hyp, Verdict::pass_certified,
                       "no proper support-closed coordinate set (exact scan)");
    }
  }

  std::mt19937_64 rng(seed);
  const std::vector<RVec> boundary = boundary_samples(cone, budget, rng);
  long checked = 0;
  auto check_one = [&](const RVec& d, const RVec& x, const RVec& y,
                       const RVec& image) -> std::optional<HypothesisVerdict> {
    const SupportReduction red = support_reduction(cone, d, image);
    guard_grid_agreement(cone, d, image, red);
    ++checked;
    if (require_witness_functional) {
      // SSP/SSI: a separating facet functional must exist
      if (!red.witness_facet) {
        HypothesisVerdict v = pm == PairMode::point
                                  ? make_fail(hyp, x, "no dual functional separates")
                                  : make_fail_pair(hyp, x, y, "no dual functional separates");
        if (red.violated) v.beta = beta_as_double(red);
        return v;
      }
    } else if (red.violated) {
      HypothesisVerdict v =
          pm == PairMode::point
              ? make_fail(hyp, x, "feasible beta found for a boundary point")
              : make_fail_pair(hyp, x, y, "feasible beta found for a boundary difference");
      v.beta = beta_as_double(red);
      return v;
    }
    return std::nullopt;
  };
  for (const RVec& d : boundary) {
    if (is_zero(d)) continue;
    if (pm == PairMode::point) {
      if (auto v = check_one(d, d, {}, map.apply_exact(d))) return *v;
    } else {
      // base points: the interior point deterministically, then a random draw
      std::vector<RVec> bases;
      if (cone.solid()) bases.push_back(cone.interior_point());
      bases.push_back(cone.sample_rational(rng));
      for (const RVec& y : bases) {
        const RVec x = radd(y, d);
        const RVec image = rsub(map.apply_exact(x), map.apply_exact(y));
        if (auto v = check_one(d, x, y, image)) return *v;
      }
    }
  }
  return make_pass(hyp, Verdict::pass_sampled,
                   std::to_string(checked) + " boundary samples decided exactly");
}

}  // namespace

HypothesisVerdict check_B1(const ConeMap& map, int budget, unsigned seed) {
  if (!positivity_precondition(map, seed))
    throw std::invalid_argument("check_B1: map is not positive");
  return boundary_checker(map, Hypothesis::B1, PairMode::point, false, budget, seed);
}

HypothesisVerdict check_B2(const ConeMap& map, int budget, unsigned seed) {
  return boundary_checker(map, Hypothesis::B2, PairMode::pair, false, budget, seed);
}

HypothesisVerdict check_SSP(const ConeMap& map, int budget, unsigned seed) {
  return boundary_checker(map, Hypothesis::SSP, PairMode::point, true, budget, seed);
}

HypothesisVerdict check_SSI(const ConeMap& map, int budget, unsigned seed) {
  return boundary_checker(map, Hypothesis::SSI, PairMode::pair, true, budget, seed);
}

HypothesisVerdict check_A1(const ConeMap& map, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v, const Eigen::VectorXd& w, double M, int p) {
  const PolyhedralCone& cone = map.domain();
  const double scale = std::max({1.0, u.norm(), v.norm(), w.norm()});
  auto fail = [&](const std::string& clause) {
    HypothesisVerdict out = make_fail(Hypothesis::A1, rvec_of(u), clause);
    return out;
  };
  if (M <= 0) return fail("M > 0 violated");
  if (p < 1) return fail("p must be a positive integer");
  if ((u - (v - w)).norm() > kDefaultTol * scale) return fail("u != v - w");
  if (!cone.contains(v, kDefaultTol * scale) || !cone.contains(w, kDefaultTol * scale))
    return fail("v, w must lie in the cone");
  if (u.norm() <= kDefaultTol * scale) return fail("u != 0 violated");
  if (cone.contains(-u, kDefaultTol * scale)) return fail("-u lies in the cone");
  RVec tpu;
  try {
    tpu = map.apply_pow_exact(rvec_of(u), p);
  } catch (const std::invalid_argument&) {
    return fail("map undefined along the orbit of u");
  }
  const RVec gap = rsub(rscale(Rational(M), tpu), rvec_of(u));
  if (!cone.contains_exact(gap)) return fail("M T^p(u) does not dominate u");
  return make_pass(Hypothesis::A1, Verdict::pass_certified, "all (A1) clauses verified");
}

HypothesisVerdict check_A2_orbit(const ConeMap& map, const Eigen::VectorXd& x,
                                 double bound_threshold, int k_max) {
  const PolyhedralCone& cone = map.domain();
  if (!cone.contains(x, kDefaultTol * std::max(1.0, x.norm())))
    throw std::invalid_argument("check_A2_orbit: x outside cone");
  Eigen::VectorXd cur = x;
  double sup_norm = cur.norm();
  for (int k = 1; k <= k_max; ++k) {
    const Eigen::VectorXd next = map.apply(cur);
    const double nn = next.norm();
    if (!std::isfinite(nn)) throw std::runtime_error("check_A2_orbit: NaN in orbit");
    sup_norm = std::max(sup_norm, nn);
    if (sup_norm > bound_threshold) {
      HypothesisVerdict v = make_pass(Hypothesis::A2, Verdict::pass_sampled,
                                      "orbit norm exceeded threshold at step " +
                                          std::to_string(k) +
                                          " (finite-horizon surrogate for unboundedness)");
      return v;
    }
    if ((next - cur).norm() <= 1e-12 * (1.0 + cur.norm())) {
      // converged to a fixed point below the threshold: orbit is bounded
      HypothesisVerdict v = make_fail(Hypothesis::A2, rvec_of(next),
                                      "orbit converged to a fixed point of norm " +
                                          std::to_string(nn) + " below the threshold");
      return v;
    }
    cur = next;
  }
  return make_pass(Hypothesis::A2, Verdict::unknown,
                   "orbit neither exceeded the threshold nor verifiably converged within " +
                       std::to_string(k_max) + " steps");
}

ImplicationAuditReport implication_audit(const ConeMap& map, int budget, unsigned seed) {
  ImplicationAuditReport report;
  report.ssp = check_SSP(map, budget, seed);
  report.b1 = check_B1(map, budget, seed);
  report.b2 = check_B2(map, budget, seed);
  report.ssi = check_SSI(map, budget, seed);
  const HypothesisVerdict super =
      check_superadditive(map,
                          map.defined_on_space() ? SuperadditiveScope::on_space
                                                 : SuperadditiveScope::on_cone,
                          budget, seed);
  report.superadditive_certified = super.verdict == Verdict::pass_certified;

  auto add = [&report](const std::string& name, bool ante, bool cons) {
    report.implications.push_back({name, ante, cons, ante && !cons});
    if (ante && !cons) report.consistent = false;
  };
  add("SSP => B1", report.ssp.passed(), report.b1.passed());
  add("B2 => B1", report.b2.passed(), report.b1.passed());
  add("SSI => B2", report.ssi.passed(), report.b2.passed());
  if (report.superadditive_certified)
    add("superadditive & B1 => B2", report.b1.passed(), report.b2.passed());
  return report;
}

}  // namespace conespec
