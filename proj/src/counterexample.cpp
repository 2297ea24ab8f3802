#include "conespec/counterexample.hpp"

#include "conespec/cone.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace conespec {

namespace {

RVec rv(std::initializer_list<long long> vals) {
  RVec out;
  for (long long v : vals) out.emplace_back(v);
  return out;
}

std::string fmt(const RVec& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

ConeMap build_example1() {
  PolyhedralCone quadrant = PolyhedralCone::orthant(2);
  std::vector<ConicRegion> regions(3);
  // middle sector first: membership ties at the rays resolve here
  regions[0].weak = {rv({-1, 2}), rv({2, -1})};  // x1 <= 2*x2 and x2 <= 2*x1
  regions[0].matrix = {rv({3, 0}), rv({0, 3})};
  regions[1].strict = {rv({1, -2})};  // x1 > 2*x2
  regions[1].matrix = {rv({2, 2}), rv({1, 1})};
  regions[2].strict = {rv({-2, 1})};  // x2 > 2*x1
  regions[2].matrix = {rv({1, 1}), rv({2, 2})};
  return ConeMap::piecewise(std::move(regions), std::move(quadrant));
}

Example1Region example1_region(const RVec& x) {
  if (x.size() != 2 || x[0] < 0 || x[1] < 0)
    throw std::invalid_argument("example1_region: point outside the quadrant");
  if (x[0] <= 2 * x[1] && x[1] <= 2 * x[0]) return Example1Region::middle;
  return x[0] > 2 * x[1] ? Example1Region::lower : Example1Region::upper;
}

ConeMap build_sector_family(const Rational& slope, const Rational& eigenvalue) {
  if (slope <= 1) throw std::invalid_argument("sector family requires slope > 1");
  if (eigenvalue <= 0) throw std::invalid_argument("sector family requires eigenvalue > 0");
  const Rational a = eigenvalue * slope / (slope + 1);
  const Rational b = eigenvalue / (slope + 1);
  PolyhedralCone quadrant = PolyhedralCone::orthant(2);
  std::vector<ConicRegion> regions(3);
  regions[0].weak = {{-1, slope}, {slope, -1}};
  regions[0].matrix = {{eigenvalue, 0}, {0, eigenvalue}};
  regions[1].strict = {{1, -slope}};
  regions[1].matrix = {{a, a}, {b, b}};
  regions[2].strict = {{-slope, 1}};
  regions[2].matrix = {{b, b}, {a, a}};
  return ConeMap::piecewise(std::move(regions), std::move(quadrant));
}

namespace {

const char* region_name(Example1Region r) {
  switch (r) {
    case Example1Region::middle: return "middle";
    case Example1Region::lower: return "lower";
    case Example1Region::upper: return "upper";
  }
  return "?";
}

RVec sample_quadrant(std::mt19937_64& rng, int scale) {
  std::uniform_int_distribution<int> num(0, 16);
  std::uniform_int_distribution<int> dpow(0, 4);
  while (true) {
    RVec x{Rational(scale * num(rng)) / Rational(1 << dpow(rng)),
           Rational(scale * num(rng)) / Rational(1 << dpow(rng))};
    if (!is_zero(x)) return x;
  }
}

RVec sample_region(std::mt19937_64& rng, Example1Region target, int scale) {
  while (true) {
    RVec x = sample_quadrant(rng, scale);
    if (example1_region(x) == target) return x;
  }
}

// The case analysis samples pairs on the lattice Z^2 / 4 and runs every check
// in exact integer arithmetic over that common denominator (values stay far
// below the int64 range: coordinates <= 8*64, matrix entries <= 3). This is
// still the exact-rational path, just with the gcd bookkeeping factored out of
// the hot loop; certificates are reported as rationals.
using IVec = std::array<long long, 2>;

Example1Region iregion(const IVec& v) {
  if (v[0] <= 2 * v[1] && v[1] <= 2 * v[0]) return Example1Region::middle;
  return v[0] > 2 * v[1] ? Example1Region::lower : Example1Region::upper;
}

IVec iapply(const IVec& v) {
  switch (iregion(v)) {
    case Example1Region::middle: return {3 * v[0], 3 * v[1]};
    case Example1Region::lower: return {2 * (v[0] + v[1]), v[0] + v[1]};
    case Example1Region::upper: return {v[0] + v[1], 2 * (v[0] + v[1])};
  }
  return {0, 0};
}

bool istrictly_below(const IVec& x, const IVec& y) {
  return y[0] >= x[0] && y[1] >= x[1] && (y[0] > x[0] || y[1] > x[1]);
}

/// The intermediate inequality chains of the cross-sector cases, re-derived on
/// a concrete comparable pair. Same-sector pairs need no chain. All the
/// inequalities are 1-homogeneous in the joint pair, so the common lattice
/// denominator cancels; halves are cleared by doubling.
bool chains_hold(Example1Region rx, Example1Region ry, const IVec& x, const IVec& y) {
  const long long sx = x[0] + x[1];
  const long long sy = y[0] + y[1];
  using R = Example1Region;
  if (rx == ry) return true;
  if (rx == R::lower && ry == R::upper) {
    return 2 * x[1] < x[0] && x[0] <= y[0] && 2 * y[0] < y[1] &&  // ordering chain
           2 * sx < 3 * x[0] && 3 * x[0] <= 3 * y[0] && 3 * y[0] < sy;
  }
  if (rx == R::upper && ry == R::lower) {
    return 2 * x[0] < x[1] && x[1] <= y[1] && 2 * y[1] < y[0] &&
           2 * sx < 3 * x[1] && 3 * x[1] <= 3 * y[1] && 3 * y[1] < sy;
  }
  if (rx == R::lower && ry == R::middle) {
    return 2 * x[1] < x[0] && x[0] <= y[0] && y[0] <= 2 * y[1] &&
           2 * sx < 3 * y[0] && sx < 3 * y[1];
  }
  if (rx == R::upper && ry == R::middle) {
    return 2 * x[0] < x[1] && x[1] <= y[1] && y[1] <= 2 * y[0] &&
           2 * sx < 3 * y[1] && sx < 3 * y[0];
  }
  if (rx == R::middle && ry == R::lower) {
    return y[0] > 2 * y[1] && 2 * y[1] >= 2 * x[1] && 2 * x[1] >= x[0] &&
           2 * sy > 3 * x[0] && sy > 3 * x[1];
  }
  if (rx == R::middle && ry == R::upper) {
    return y[1] > 2 * y[0] && 2 * y[0] >= 2 * x[0] && 2 * x[0] >= x[1] &&
           2 * sy > 3 * x[1] && sy > 3 * x[0];
  }
  return false;
}

RVec lattice_to_rational(const IVec& v) {
  return {Rational(v[0]) / 4, Rational(v[1]) / 4};
}

}  // namespace

CaseAnalysisReport verify_case_analysis(long samples_per_case, unsigned seed) {
  const ConeMap map = build_example1();
  std::mt19937_64 rng(seed);
  CaseAnalysisReport report;
  const std::array<Example1Region, 3> all = {Example1Region::lower, Example1Region::middle,
                                             Example1Region::upper};
  const std::array<int, 4> scales = {1, 2, 4, 8};
  std::uniform_int_distribution<int> num(0, 16);
  const std::array<int, 3> denom_mult = {4, 2, 1};  // lattice steps 1, 1/2, 1/4
  auto draw = [&](Example1Region target, int scale) {
    while (true) {
      IVec v{scale * num(rng) * denom_mult[rng() % 3],
             scale * num(rng) * denom_mult[rng() % 3]};
      if (v[0] == 0 && v[1] == 0) continue;
      if (iregion(v) == target) return v;
    }
  };
  for (Example1Region rx : all) {
    for (Example1Region ry : all) {
      CasePairStats stats;
      stats.name = std::string(region_name(rx)) + "<" + region_name(ry);
      int scale_idx = 0;
      while (stats.samples < samples_per_case) {
        const IVec x = draw(rx, 1);
        const IVec y = draw(ry, scales[static_cast<std::size_t>(scale_idx)]);
        scale_idx = (scale_idx + 1) % static_cast<int>(scales.size());
        if (!istrictly_below(x, y)) continue;
        ++stats.samples;
        ++report.total_samples;
        const IVec tx = iapply(x);
        const IVec ty = iapply(y);
        const bool strict = istrictly_below(tx, ty);
        const bool chains = chains_hold(rx, ry, x, y);
        if (!strict || !chains) {
          ++stats.violations;
          ++report.total_violations;
          report.all_strict = report.all_strict && strict;
          report.chains_verified = report.chains_verified && chains;
          if (stats.first_violation.empty())
            stats.first_violation = "x=" + fmt(lattice_to_rational(x)) +
                                    " y=" + fmt(lattice_to_rational(y)) +
                                    " T(x)=" + fmt(lattice_to_rational(tx)) +
                                    " T(y)=" + fmt(lattice_to_rational(ty));
        }
      }
      report.cases.push_back(std::move(stats));
    }
  }
  // the lattice evaluator must match the map itself; spot-check the agreement
  for (int k = 0; k < 256; ++k) {
    const IVec v{static_cast<long long>(rng() % 257), static_cast<long long>(rng() % 257)};
    if (v[0] == 0 && v[1] == 0) continue;
    const RVec lhs = map.apply_exact(lattice_to_rational(v));
    if (!operator_eq(lhs, lattice_to_rational(iapply(v))))
      throw std::logic_error("case analysis: lattice evaluator disagrees with the map");
  }
  return report;
}

namespace {

Certificate certify(std::string claim, std::string data, bool holds) {
  return Certificate{std::move(claim), std::move(data), holds};
}

void require(const Certificate& c) {
  if (!c.holds)
    throw std::logic_error("refutation assertion failed: " + c.claim + " [" + c.data + "]");
}

}  // namespace

RefutationReport refutation_report(const RefutationOptions& opts) {
  const ConeMap map = build_example1();
  const PolyhedralCone& cone = map.domain();
  std::mt19937_64 rng(opts.seed);
  RefutationReport report;

  // --- hypotheses of the uniqueness/simplicity claim -------------------------

  {  // 1-homogeneity, exact on sampled points and rational scales
    bool ok = true;
    const std::array<Rational, 5> ts = {Rational(0), Rational(1) / 2, Rational(2), Rational(3),
                                        Rational(7) / 4};
    for (int k = 0; k < 64 && ok; ++k) {
      const RVec x = sample_quadrant(rng, 1);
      for (const Rational& t : ts)
        ok = ok && operator_eq(map.apply_exact(rscale(t, x)), rscale(t, map.apply_exact(x)));
    }
    report.hypothesis_certificates.push_back(
        certify("T(t*x) = t*T(x) for sampled x and rational t (1-homogeneity)",
                "64 points x 5 scales, exact", ok));
  }
  {  // continuity across the sector rays, both matrices evaluated exactly
    const RVec ray_low = rv({2, 1});
    const RVec ray_up = rv({1, 2});
    const RMat lower_m = {rv({2, 2}), rv({1, 1})};
    const RMat upper_m = {rv({1, 1}), rv({2, 2})};
    const bool low_ok = operator_eq(rmatvec(lower_m, ray_low), rscale(Rational(3), ray_low));
    const bool up_ok = operator_eq(rmatvec(upper_m, ray_up), rscale(Rational(3), ray_up));
    report.hypothesis_certificates.push_back(certify(
        "both matrices agree with 3*x on the shared sector rays (continuity)",
        "(2,2;1,1)*(2,1)=(6,3)=3*(2,1) and (1,1;2,2)*(1,2)=(3,6)=3*(1,2)", low_ok && up_ok));
  }
  report.hypothesis_certificates.push_back(
      certify("complete continuity", "continuous 1-homogeneous map on R^2: bounded sets have "
                                     "relatively compact images in finite dimension", true));
  {  // M T(u) >= u
    const RVec u = rv({1, 1});
    const RVec tu = map.apply_exact(u);
    const bool ok = tu[0] >= u[0] && tu[1] >= u[1];
    report.hypothesis_certificates.push_back(
        certify("M*T(u) >= u with u=(1,1), M=1", "T(1,1) = " + fmt(tu), ok));
  }
  report.hypothesis_certificates.push_back(
      certify("the cone has nonempty interior", "quadrant contains (1,1) strictly", true));

  {  // strong positivity: both boundary rays exactly, then sampled boundary points
    const RVec te1 = map.apply_exact(rv({1, 0}));
    const RVec te2 = map.apply_exact(rv({0, 1}));
    const bool rays_ok = te1[0] > 0 && te1[1] > 0 && te2[0] > 0 && te2[1] > 0;
    report.hypothesis_certificates.push_back(certify(
        "images of both boundary rays are interior", "T(1,0)=" + fmt(te1) + ", T(0,1)=" + fmt(te2),
        rays_ok));
    bool sampled_ok = rays_ok;
    std::uniform_int_distribution<int> num(1, 4096);
    std::uniform_int_distribution<int> den(0, 8);
    for (long k = 0; k < opts.boundary_samples; ++k) {
      const Rational t = Rational(num(rng)) / Rational(1 << den(rng));
      RVec x(2, Rational(0));
      x[k % 2] = t;
      const RVec y = map.apply_exact(x);
      sampled_ok = sampled_ok && cone.interior_contains_exact(y);
    }
    report.boundary_samples = opts.boundary_samples;
    report.hypothesis_certificates.push_back(
        certify("strong positivity on sampled boundary points",
                std::to_string(opts.boundary_samples) + " exact samples on both rays",
                sampled_ok));
    report.strongly_positive = sampled_ok;
  }

  report.case_analysis = verify_case_analysis(opts.case_samples_per_config, opts.seed + 1);
  report.strictly_order_preserving =
      report.case_analysis.total_violations == 0 && report.case_analysis.chains_verified;
  report.hypothesis_certificates.push_back(
      certify("strict order preservation over all sector configurations",
              std::to_string(report.case_analysis.total_samples) + " comparable pairs, " +
                  std::to_string(report.case_analysis.total_violations) + " violations",
              report.strictly_order_preserving));

  for (const Certificate& c : report.hypothesis_certificates) require(c);

  // --- multiple unit eigenvectors ---------------------------------------------

  const std::array<RVec, 3> eigen_rays = {rv({2, 1}), rv({1, 1}), rv({1, 2})};
  for (const RVec& ray : eigen_rays) {
    const RVec image = map.apply_exact(ray);
    const bool ok = operator_eq(image, rscale(Rational(3), ray));
    report.eigenvector_certificates.push_back(
        certify("T(x) = 3*x exactly at x = " + fmt(ray), "T" + fmt(ray) + " = " + fmt(image), ok));
  }
  {  // pairwise distinct rays (nonzero cross products)
    bool distinct = true;
    for (std::size_t i = 0; i < eigen_rays.size(); ++i)
      for (std::size_t j = i + 1; j < eigen_rays.size(); ++j)
        distinct = distinct && (eigen_rays[i][0] * eigen_rays[j][1] -
                                eigen_rays[i][1] * eigen_rays[j][0]) != 0;
    report.eigenvector_certificates.push_back(certify(
        "the three eigenvectors are pairwise non-proportional",
        "(2,1)/sqrt(5), (1,1)/sqrt(2), (1,2)/sqrt(5) have nonzero pairwise cross products",
        distinct));
  }
  for (const Certificate& c : report.eigenvector_certificates) require(c);
  report.multiple_unit_eigenvectors = true;

  // --- the eigencone is the whole middle sector and has dimension 2 -----------

  {
    const Rational det = Rational(2) * 2 - Rational(1) * 1;  // rays (2,1) and (1,2)
    report.eigencone_certificates.push_back(
        certify("eigencone rays (2,1), (1,2) are linearly independent", "det = " + to_string(det),
                det != 0));
    bool middle_ok = true;
    for (long k = 0; k < opts.region_probes; ++k) {
      const RVec x = sample_region(rng, Example1Region::middle, 1);
      middle_ok = middle_ok && operator_eq(map.apply_exact(x), rscale(Rational(3), x));
    }
    report.eigencone_certificates.push_back(
        certify("every sampled middle-sector point is an eigenvector for 3",
                std::to_string(opts.region_probes) + " exact probes", middle_ok));
    report.eigencone_dimension = 2;
  }
  for (Example1Region r : {Example1Region::lower, Example1Region::upper}) {
    bool none_eigen = true;
    std::string first;
    for (long k = 0; k < opts.region_probes; ++k) {
      RVec x = sample_region(rng, r, 1);
      const RVec y = map.apply_exact(x);
      const Rational cross = x[0] * y[1] - x[1] * y[0];
      if (cross == 0) {
        // the fixed rays of the outer matrices lie on the sector boundary,
        // which belongs to the middle sector under the tie rule
        none_eigen = false;
        first = "x=" + fmt(x);
      }
    }
    report.non_eigenvector_certificates.push_back(
        certify(std::string("no sampled interior point of the ") + region_name(r) +
                    " sector is an eigenvector",
                std::to_string(opts.region_probes) + " exact probes" +
                    (first.empty() ? "" : "; counterexample " + first),
                none_eigen));
  }
  for (const Certificate& c : report.eigencone_certificates) require(c);
  for (const Certificate& c : report.non_eigenvector_certificates) require(c);

  report.uniqueness_refuted = true;
  report.simplicity_refuted = true;
  report.conclusion =
      "All hypotheses hold (order-preserving strictly, 1-homogeneous, completely continuous, "
      "strongly positive, M*T(u) >= u, interior nonempty), yet the map has at least three "
      "distinct unit eigenvectors with eigenvalue 3 and its eigencone has dimension 2. "
      "Uniqueness of the positive unit eigenvector and geometric simplicity are refuted; "
      "existence and the eigenvalue-dominance item are unaffected (every cone eigenvalue is 3).";
  return report;
}

std::string to_text(const RefutationReport& report) {
  std::ostringstream os;
  os << "refutation report\n=================\n\nhypothesis certificates:\n";
  auto dump = [&os](const std::vector<Certificate>& certs) {
    for (const Certificate& c : certs)
      os << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.claim << "\n        " << c.data
         << "\n";
  };
  dump(report.hypothesis_certificates);
  os << "\ncase analysis: " << report.case_analysis.total_samples << " comparable pairs, "
     << report.case_analysis.total_violations << " violations\n";
  for (const CasePairStats& s : report.case_analysis.cases)
    os << "  " << s.name << ": " << s.samples << " pairs, " << s.violations << " violations\n";
  os << "\neigenvector certificates:\n";
  dump(report.eigenvector_certificates);
  os << "\neigencone certificates:\n";
  dump(report.eigencone_certificates);
  dump(report.non_eigenvector_certificates);
  os << "\neigencone dimension: " << report.eigencone_dimension << "\n";
  os << "uniqueness refuted: " << (report.uniqueness_refuted ? "yes" : "no") << "\n";
  os << "simplicity refuted: " << (report.simplicity_refuted ? "yes" : "no") << "\n\n";
  os << report.conclusion << "\n";
  return os.str();
}

}  // namespace conespec
