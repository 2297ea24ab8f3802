#include "conespec/superadditive.hpp"

#include "conespec/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace conespec {

namespace {

struct Multistart {
  std::vector<EigenPair> converged;
  double max_deviation = 0.0;
};

Multistart multistart_power_iteration(const ConeMap& map, int budget, unsigned seed) {
  const PolyhedralCone& cone = map.domain();
  std::vector<Eigen::VectorXd> starts;
  const auto& gens = cone.generators_unit();
  for (Eigen::Index j = 0; j < gens.cols(); ++j) starts.push_back(gens.col(j));
  starts.push_back(to_eigen(cone.interior_point()).normalized());
  std::mt19937_64 rng(seed);
  while (static_cast<int>(starts.size()) < budget) starts.push_back(cone.sample_unit(rng));

  Multistart out;
  for (const Eigen::VectorXd& s : starts) {
    try {
      if (auto pair = power_iteration(map, s, 2000, 1e-12)) out.converged.push_back(*pair);
    } catch (const std::exception&) {
      // kernel orbit from this start; other starts may still converge
    }
  }
  for (std::size_t i = 0; i < out.converged.size(); ++i)
    for (std::size_t j = i + 1; j < out.converged.size(); ++j)
      out.max_deviation =
          std::max(out.max_deviation, (out.converged[i].x - out.converged[j].x).norm());
  return out;
}

}  // namespace

SuperadditiveAnalysis analyze_superadditive(const ConeMap& map, int budget, unsigned seed) {
  const HypothesisVerdict structural = check_superadditive(
      map, map.defined_on_space() ? SuperadditiveScope::on_space : SuperadditiveScope::on_cone,
      64, seed);
  if (structural.verdict != Verdict::pass_certified)
    throw std::invalid_argument("analyze_superadditive: superadditivity is not structurally "
                                "certified for this map variant");
  const PositivityResult pos = classify_positivity(map, 128, seed);
  if (pos.grade == PositivityGrade::not_positive)
    throw std::invalid_argument("analyze_superadditive: map is not positive");
  const BonsallResult growth = bonsall_radius(map, 48, 128, seed);
  if (!(growth.estimate.value > 1e-9))
    throw std::invalid_argument("analyze_superadditive: no positive eigenvalue guaranteed "
                                "(Bonsall estimate is not positive)");

  SuperadditiveAnalysis analysis;
  analysis.b1 = check_B1(map, 256, seed);

  const Multistart plus = multistart_power_iteration(map, budget, seed);
  if (!plus.converged.empty()) {
    analysis.pair_plus = *std::max_element(
        plus.converged.begin(), plus.converged.end(),
        [](const EigenPair& a, const EigenPair& b) { return a.lambda < b.lambda; });
  } else {
    // fall back to the region oracle
    if (map.dim() > 3)
      throw std::runtime_error("analyze_superadditive: no cone eigenpair found");
    PwlEigenReport oracle = enumerate_eigenpairs_pwl(map);
    if (oracle.pairs.empty())
      throw std::runtime_error("analyze_superadditive: no cone eigenpair found");
    analysis.pair_plus = *std::max_element(
        oracle.pairs.begin(), oracle.pairs.end(),
        [](const EigenPair& a, const EigenPair& b) { return a.lambda < b.lambda; });
    analysis.notes += "cone eigenpair from the region oracle (power iteration did not converge); ";
  }
  analysis.multistart_converged = static_cast<int>(plus.converged.size());
  analysis.multistart_max_deviation = plus.max_deviation;
  if (analysis.b1.passed()) {
    analysis.uniqueness_checked = true;
    analysis.uniqueness_ok = plus.converged.size() >= 2 && plus.max_deviation <= 1e-8;
  } else {
    analysis.notes += "uniqueness check skipped: B1 fails; ";
  }

  const ConeMap conj = map.negate_conjugate();
  const Multistart minus = multistart_power_iteration(conj, budget, seed + 1);
  if (!minus.converged.empty()) {
    analysis.pair_minus = *std::max_element(
        minus.converged.begin(), minus.converged.end(),
        [](const EigenPair& a, const EigenPair& b) { return a.lambda < b.lambda; });
  } else {
    if (conj.dim() <= 3) {
      PwlEigenReport oracle = enumerate_eigenpairs_pwl(conj);
      if (!oracle.pairs.empty())
        analysis.pair_minus = *std::max_element(
            oracle.pairs.begin(), oracle.pairs.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.lambda < b.lambda; });
      else
        throw std::runtime_error("analyze_superadditive: no negative-cone eigenpair found");
    } else {
      throw std::runtime_error("analyze_superadditive: no negative-cone eigenpair found");
    }
  }
  // S's cone eigenvector represents the negative-cone eigenvector of T
  analysis.pair_minus.x = -analysis.pair_minus.x;
  if (analysis.pair_minus.exact_ray) analysis.pair_minus.exact_ray = rneg(*analysis.pair_minus.exact_ray);

  if (map.dim() <= 3) {
    for (RegionEigenPair& p : enumerate_eigenpairs_regions(map))
      if (p.stratum == RegionEigenPair::Stratum::off_cone) analysis.other_eigs.push_back(p);
  } else {
    analysis.notes += "off-cone spectrum not enumerated (oracle restricted to low dimension); ";
  }

  analysis.ordering_ok = analysis.pair_minus.lambda >= analysis.pair_plus.lambda - analysis.tol;
  analysis.bound_ok = true;
  for (const RegionEigenPair& p : analysis.other_eigs) {
    if (p.region_boundary) continue;  // stratum ambiguous; reported but not asserted
    analysis.bound_ok =
        analysis.bound_ok && eigenvalue_bound_check(map, analysis.pair_plus, p, analysis.tol);
  }
  return analysis;
}

BoundaryRayCertificate uniqueness_via_boundary_ray(const ConeMap& map, const Eigen::VectorXd& x0,
                                                   const Eigen::VectorXd& y0, double tol) {
  const PolyhedralCone& cone = map.domain();
  if (x0.size() != cone.dim() || y0.size() != cone.dim())
    throw std::invalid_argument("uniqueness_via_boundary_ray: dimension mismatch");
  BoundaryRayCertificate cert;

  // critical alpha = max { a : x0 - a*y0 in cone } = min over facets with
  // <a, y0> > 0 of <a, x0> / <a, y0>
  double alpha = std::numeric_limits<double>::infinity();
  const Eigen::MatrixXd& facets = cone.facet_normals_unit();
  for (Eigen::Index i = 0; i < facets.rows(); ++i) {
    const double fy = facets.row(i).dot(y0);
    if (fy > tol) alpha = std::min(alpha, facets.row(i).dot(x0) / fy);
  }
  if (!std::isfinite(alpha)) {
    cert.degenerate = true;
    cert.detail = "y0 is unconstrained by every facet: no finite critical alpha";
    return cert;
  }
  cert.alpha = std::max(0.0, alpha);
  cert.boundary_point = x0 - cert.alpha * y0;
  for (Eigen::Index i = 0; i < facets.rows(); ++i)
    if (facets.row(i).dot(y0) <= tol && facets.row(i).dot(x0) > tol) cert.degenerate = true;

  if (cert.boundary_point.norm() <= std::max(tol, 1e-8) * std::max(1.0, x0.norm())) {
    cert.duplicate = true;
    cert.detail = "x0 - alpha*y0 vanished: the two eigenvectors coincide";
    return cert;
  }
  if (cert.alpha <= tol) {
    cert.degenerate = true;
    cert.detail = "critical alpha is zero: y0 has support where x0 vanishes";
    return cert;
  }

  // superadditivity gives T(z) <= T(x0) - alpha*T(y0) = lambda*z, so z admits
  // a feasible beta = 1/lambda, contradicting (B1) at a boundary point
  const double lambda = map.apply(x0).norm() / std::max(x0.norm(), 1e-300);
  const Eigen::VectorXd tz = map.apply(cert.boundary_point);
  const Eigen::VectorXd gap = lambda * cert.boundary_point - tz;
  const double scale = std::max(1.0, cert.boundary_point.norm() * lambda);
  cert.contradiction_verified = lambda > tol && cone.contains(gap, 1e-7 * scale) &&
                                cone.on_boundary(cert.boundary_point, 1e-7);
  cert.beta = lambda > tol ? 1.0 / lambda : 0.0;
  cert.detail = cert.contradiction_verified
                    ? "genuinely distinct eigenvectors would violate (B1) at the boundary point"
                    : "contradiction not verified numerically";
  return cert;
}

bool eigenvalue_bound_check(const ConeMap& map, const EigenPair& pair_plus,
                            const RegionEigenPair& eig, double tol) {
  const PolyhedralCone& cone = map.domain();
  if (cone.contains(eig.x, 1e-9) || cone.contains(-eig.x, 1e-9))
    throw std::invalid_argument("eigenvalue_bound_check: wrong stratum (eigenvector lies in a cone)");
  const Eigen::VectorXd residual = map.apply(eig.x) - eig.lambda * eig.x;
  if (residual.norm() > 1e-8 * std::max(1.0, std::abs(eig.lambda)))
    throw std::invalid_argument("eigenvalue_bound_check: eigenpair is not certified");
  return std::abs(eig.lambda) <= pair_plus.lambda + tol;
}

}  // namespace conespec
