#include "conespec/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace conespec {

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;

/// Continued-fraction rationalization with bounded denominator; nullopt when
/// no fraction matches x to 1e-9 relative accuracy.
std::optional<Rational> rationalize(double x, long long max_den = 1000000) {
  if (!std::isfinite(x)) return std::nullopt;
  const double target = x;
  double v = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(v);
    if (fl > 9.0e18 || fl < -9.0e18) return std::nullopt;
    const long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - target) <= 1e-9 * std::max(1.0, std::abs(target)))
      return Rational(p1) / Rational(q1);
    const double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  const double approx = static_cast<double>(p1) / static_cast<double>(q1);
  if (q1 > 0 && std::abs(approx - target) <= 1e-9 * std::max(1.0, std::abs(target)))
    return Rational(p1) / Rational(q1);
  return std::nullopt;
}

/// Rational ray recovered from a float direction (scaled so the largest
/// component is 1), or nullopt when the components do not rationalize.
std::optional<RVec> rationalize_ray(const Eigen::VectorXd& x) {
  Eigen::Index jmax = 0;
  x.cwiseAbs().maxCoeff(&jmax);
  if (x[jmax] == 0.0) return std::nullopt;
  RVec out(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    auto r = rationalize(x[i] / x[jmax]);
    if (!r) return std::nullopt;
    out[static_cast<std::size_t>(i)] = *r;
  }
  return out;
}

std::optional<Rational> scaled_identity_factor(const RMat& m) {
  const std::size_t n = m.size();
  const Rational c = m[0][0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != (i == j ? c : Rational(0))) return std::nullopt;
  return c;
}

/// Angular sweep bounds for a 2-dimensional cone (the sector between its
/// extreme rays, which spans less than pi because the cone is pointed).
std::pair<double, double> sector_angles(const PolyhedralCone& cone) {
  const auto& g = cone.generators_unit();
  double a0 = std::atan2(g(1, 0), g(0, 0));
  double a1 = a0;
  for (Eigen::Index j = 1; j < g.cols(); ++j) {
    double a = std::atan2(g(1, j), g(0, j));
    while (a < a0 - M_PI) a += 2 * M_PI;
    while (a > a0 + M_PI) a -= 2 * M_PI;
    a1 = std::max(a1, a);
    a0 = std::min(a0, a);
  }
  return {a0, a1};
}

Eigen::Vector2d on_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

std::vector<Eigen::VectorXd> unit_probe_set(const ConeMap& map, int budget, unsigned seed,
                                            int grid_2d) {
  const PolyhedralCone& cone = map.domain();
  std::vector<Eigen::VectorXd> probes;
  const auto& gens = cone.generators_unit();
  for (Eigen::Index j = 0; j < gens.cols(); ++j) probes.push_back(gens.col(j));
  probes.push_back(to_eigen(cone.interior_point()).normalized());
  auto add_rays = [&probes](const std::vector<RMat>& ray_lists) {
    for (const RMat& rays : ray_lists)
      for (const RVec& r : rays) probes.push_back(to_eigen(r).normalized());
  };
  if (map.kind() == ConeMap::Kind::piecewise)
    add_rays(map.region_cone_rays());
  else if (map.dim() <= 3) {
    if (auto pw = map.as_piecewise()) add_rays(pw->region_cone_rays());
  }
  if (map.dim() == 2 && grid_2d > 1) {
    auto [a0, a1] = sector_angles(cone);
    for (int k = 0; k <= grid_2d; ++k)
      probes.push_back(on_angle(a0 + (a1 - a0) * k / grid_2d));
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < budget; ++k) probes.push_back(cone.sample_unit(rng));
  return probes;
}

}  // namespace

Estimate cone_norm(const ConeMap& map, int budget, unsigned seed) {
  const PolyhedralCone& cone = map.domain();
  if (!cone.solid()) throw std::invalid_argument("cone_norm: cone has empty interior");
  const int n = map.dim();

  // structured exact path: every region scaled-identity or rank one
  std::optional<double> exact_value;
  int exact_candidates = 0;
  if (n <= 3) {
    std::optional<ConeMap> pw =
        map.kind() == ConeMap::Kind::piecewise ? std::optional<ConeMap>(map) : map.as_piecewise();
    if (pw) {
      bool structured = true;
      double best = 0.0;
      for (std::size_t i = 0; i < pw->regions().size() && structured; ++i) {
        const ConicRegion& region = pw->regions()[i];
        const RMat& rays = pw->region_cone_rays()[i];
        if (auto c = scaled_identity_factor(region.matrix)) {
          if (!rays.empty()) best = std::max(best, std::abs(to_double(*c)));
          ++exact_candidates;
          continue;
        }
        if (rational_rank(region.matrix) <= 1) {
          // matrix = u w^T: ||Mx|| = ||u|| * |<w, x>|; sup over the region
          // section is attained on its rays or at the projected functional
          std::size_t iu = 0;
          while (iu < region.matrix.size() && is_zero(region.matrix[iu])) ++iu;
          if (iu == region.matrix.size()) { ++exact_candidates; continue; }  // zero matrix
          const Eigen::MatrixXd mf = to_eigen(region.matrix);
          const Eigen::VectorXd w = mf.row(static_cast<Eigen::Index>(iu)).transpose();
          const Eigen::VectorXd u = mf * w / w.squaredNorm();  // column factor
          std::vector<Eigen::VectorXd> cands;
          for (const RVec& r : rays) cands.push_back(to_eigen(r).normalized());
          RMat section = cone.facet_normals();
          RMat extra = region.strict;
          extra.insert(extra.end(), region.weak.begin(), region.weak.end());
          section.insert(section.end(), extra.begin(), extra.end());
          auto in_section = [&](const Eigen::VectorXd& x) {
            for (const RVec& a : section)
              if (to_eigen(a).dot(x) < -1e-12) return false;
            return true;
          };
          for (const Eigen::VectorXd& dir : {w, (-w).eval()})
            if (in_section(dir)) cands.push_back(dir.normalized());
          for (const RVec& a : section) {
            const Eigen::VectorXd ah = to_eigen(a).normalized();
            const Eigen::VectorXd proj = w - w.dot(ah) * ah;
            if (proj.norm() > 1e-12 && in_section(proj)) cands.push_back(proj.normalized());
          }
          for (const Eigen::VectorXd& x : cands)
            best = std::max(best, u.norm() * std::abs(w.dot(x)));
          exact_candidates += static_cast<int>(cands.size());
          continue;
        }
        structured = false;
      }
      if (structured) exact_value = best;
    }
  }

  const int grid = n == 2 ? 2048 : 0;
  std::vector<Eigen::VectorXd> probes = unit_probe_set(map, budget, seed, grid);
  double best = 0.0;
  double best_theta = std::numeric_limits<double>::quiet_NaN();
  for (const Eigen::VectorXd& x : probes) {
    const double v = map.apply(x).norm();
    if (v > best) {
      best = v;
      if (n == 2) best_theta = std::atan2(x[1], x[0]);
    }
  }
  if (n == 2 && std::isfinite(best_theta)) {
    // golden-section refinement around the best angle
    auto [s0, s1] = sector_angles(cone);
    const double width = (s1 - s0) / grid;
    double lo = std::max(s0, best_theta - 2 * width);
    double hi = std::min(s1, best_theta + 2 * width);
    auto value_at = [&](double th) { return map.apply(on_angle(th)).norm(); };
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
      const double m1 = hi - kGoldenRatio * (hi - lo);
      const double m2 = lo + kGoldenRatio * (hi - lo);
      if (value_at(m1) < value_at(m2)) lo = m1; else hi = m2;
    }
    best = std::max(best, value_at(0.5 * (lo + hi)));
  }

  Estimate out;
  if (exact_value) {
    out.value = std::max(*exact_value, best);
    out.method = "exact";
    out.n = exact_candidates;
    out.residual = 0.0;
  } else {
    out.value = best;
    out.method = n == 2 ? "iterative" : "sampled";
    out.n = static_cast<int>(probes.size());
    out.residual = 0.0;
  }
  return out;
}

BonsallResult bonsall_radius(const ConeMap& map, int n_max, int budget, unsigned seed) {
  if (n_max < 1) throw std::invalid_argument("bonsall_radius: n_max must be positive");
  const PolyhedralCone& cone = map.domain();
  const int grid = map.dim() == 2 ? std::max(256, budget) : 0;
  std::vector<Eigen::VectorXd> probes = unit_probe_set(map, budget, seed, grid);
  // power-iteration fixed points are the tight probes: along a fixed ray the
  // accumulated log-norms are exactly n*log(lambda)
  std::vector<Eigen::VectorXd> starts;
  const auto& gens = cone.generators_unit();
  for (Eigen::Index j = 0; j < gens.cols(); ++j) starts.push_back(gens.col(j));
  starts.push_back(to_eigen(cone.interior_point()).normalized());
  for (const Eigen::VectorXd& s : starts) {
    try {
      if (auto pair = power_iteration(map, s, 300, 1e-13)) probes.push_back(pair->x);
    } catch (const std::exception&) {
      // kernel orbits and non-positive maps contribute no fixed-point probe
    }
  }

  const double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<Eigen::VectorXd> state = probes;
  std::vector<double> logs(probes.size(), 0.0);
  BonsallResult out;
  out.probes = static_cast<int>(probes.size());
  out.sequence.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    double best = neg_inf;
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (logs[i] == neg_inf) continue;
      Eigen::VectorXd y = map.apply(state[i]);
      const double ny = y.norm();
      if (!std::isfinite(ny)) throw std::runtime_error("bonsall_radius: NaN in orbit");
      if (ny == 0.0) {
        logs[i] = neg_inf;
        continue;
      }
      logs[i] += std::log(ny);
      state[i] = y / ny;
      best = std::max(best, logs[i]);
    }
    out.sequence.push_back(best == neg_inf ? 0.0 : std::exp(best / n));
  }
  const double last = out.sequence.back();
  const double prev = out.sequence.size() > 1 ? out.sequence[out.sequence.size() - 2] : last;
  out.last_rel_change = last > 0 ? std::abs(last - prev) / last : 0.0;
  out.estimate = Estimate{last, "iterative", n_max, out.last_rel_change};
  return out;
}

Estimate local_mu(const ConeMap& map, const Eigen::VectorXd& x, int n_max) {
  const double nx = x.norm();
  if (nx == 0.0) throw std::invalid_argument("local_mu: x = 0");
  if (!map.domain().contains(x, kDefaultTol * std::max(1.0, nx)))
    throw std::invalid_argument("local_mu: x outside cone");
  Eigen::VectorXd state = x / nx;
  // accumulated log ||T^n x||; differencing below cancels the log ||x|| offset
  std::vector<double> logs(static_cast<std::size_t>(n_max) + 1);
  logs[0] = std::log(nx);
  int died_at = n_max + 1;
  for (int n = 1; n <= n_max; ++n) {
    if (n < died_at) {
      Eigen::VectorXd y = map.apply(state);
      const double ny = y.norm();
      if (!std::isfinite(ny)) throw std::runtime_error("local_mu: NaN in orbit");
      if (ny == 0.0)
        died_at = n;
      else {
        logs[static_cast<std::size_t>(n)] = logs[static_cast<std::size_t>(n - 1)] + std::log(ny);
        state = y / ny;
      }
    }
  }
  Estimate out;
  out.method = "iterative";
  out.n = n_max;
  if (died_at <= n_max) {
    out.value = 0.0;  // the orbit hits the kernel: ||T^n x|| is eventually zero
    out.residual = 0.0;
    return out;
  }
  // limsup surrogate: maximum over trailing-window growth means. Windows of a
  // quarter length sliding across the trailing half shed the transient while
  // still averaging over possible orbit cycles.
  const int window = std::max(1, n_max / 4);
  double best = -std::numeric_limits<double>::infinity();
  for (int m = n_max / 2; m + window <= n_max; ++m)
    best = std::max(best, (logs[static_cast<std::size_t>(m + window)] -
                           logs[static_cast<std::size_t>(m)]) /
                              window);
  if (!std::isfinite(best))
    best = (logs[static_cast<std::size_t>(n_max)] - logs[0]) / n_max;
  out.value = std::exp(best);
  const double full_mean = (logs[static_cast<std::size_t>(n_max)] - logs[0]) / n_max;
  out.residual = std::abs(out.value - std::exp(full_mean));
  return out;
}

std::optional<EigenPair> power_iteration(const ConeMap& map, const Eigen::VectorXd& x0,
                                         int max_iter, double tol) {
  const double n0 = x0.norm();
  if (n0 == 0.0) throw std::invalid_argument("power_iteration: x0 = 0");
  if (!map.domain().contains(x0, kDefaultTol * std::max(1.0, n0)))
    throw std::invalid_argument("power_iteration: x0 outside cone");
  Eigen::VectorXd x = x0 / n0;
  for (int k = 0; k < max_iter; ++k) {
    const Eigen::VectorXd y = map.apply(x);
    const double ny = y.norm();
    if (!std::isfinite(ny)) throw std::runtime_error("power_iteration: NaN in orbit");
    if (ny == 0.0) throw std::runtime_error("power_iteration: orbit hits kernel");
    const Eigen::VectorXd xn = y / ny;
    if ((xn - x).norm() <= tol) {
      EigenPair pair;
      pair.lambda = ny;
      pair.x = x;
      pair.residual = (map.apply(x) - ny * x).norm();
      pair.method = EigenPair::Method::power_iteration;
      pair.location = map.domain().solid() && map.domain().interior_contains(x)
                          ? EigenPair::Location::interior
                          : EigenPair::Location::boundary;
      if (auto ray = rationalize_ray(x)) {
        if (auto lam = rationalize(ny)) {
          try {
            if (operator_eq(map.apply_exact(*ray), rscale(*lam, *ray))) {
              pair.exact = true;
              pair.exact_ray = *ray;
              pair.exact_lambda = *lam;
            }
          } catch (const std::exception&) {
            // ray left the exact domain; keep the float certificate only
          }
        }
      }
      return pair;
    }
    x = xn;
  }
  return std::nullopt;
}

namespace {

void merge_or_insert(std::vector<EigenPair>& pairs, EigenPair cand) {
  for (EigenPair& p : pairs) {
    const double align = std::abs(p.x.dot(cand.x));
    if (align > 1.0 - 1e-9 && std::abs(p.lambda - cand.lambda) <= 1e-7 * std::max(1.0, std::abs(p.lambda))) {
      for (int r : cand.region_indices)
        if (std::find(p.region_indices.begin(), p.region_indices.end(), r) ==
            p.region_indices.end())
          p.region_indices.push_back(r);
      if (cand.exact && !p.exact) {
        p.exact = true;
        p.exact_ray = cand.exact_ray;
        p.exact_lambda = cand.exact_lambda;
        p.lambda = cand.lambda;
        p.x = cand.x;
        p.residual = cand.residual;
      }
      return;
    }
  }
  pairs.push_back(std::move(cand));
}

std::optional<ConeMap> piecewise_form(const ConeMap& map) {
  if (map.kind() == ConeMap::Kind::piecewise) return map;
  return map.as_piecewise();
}

void try_certify(const ConeMap& map, EigenPair& pair) {
  if (auto ray = rationalize_ray(pair.x)) {
    if (auto lam = rationalize(pair.lambda)) {
      try {
        if (operator_eq(map.apply_exact(*ray), rscale(*lam, *ray))) {
          pair.exact = true;
          pair.exact_ray = *ray;
          pair.exact_lambda = *lam;
          pair.lambda = to_double(*lam);
          pair.residual = 0.0;
        }
      } catch (const std::exception&) {
      }
    }
  }
}

}  // namespace

PwlEigenReport enumerate_eigenpairs_pwl(const ConeMap& map) {
  if (map.dim() > 3)
    throw std::invalid_argument("eigen oracle restricted to low dimension");
  auto pw = piecewise_form(map);
  if (!pw)
    throw std::invalid_argument("eigen oracle requires piecewise-conical-linear structure");
  const PolyhedralCone& cone = map.domain();

  PwlEigenReport report;
  for (std::size_t i = 0; i < pw->regions().size(); ++i) {
    const ConicRegion& region = pw->regions()[i];
    const RMat& rays = pw->region_cone_rays()[i];
    if (auto c = scaled_identity_factor(region.matrix)) {
      if (rays.empty()) continue;
      Eigencone ec;
      ec.exact_lambda = *c;
      ec.lambda = to_double(*c);
      ec.region_index = static_cast<int>(i);
      ec.rays = rays;
      ec.dimension = rational_rank(rays);
      report.eigencones.push_back(ec);
      // representative pairs: every extreme ray plus an interior point of the
      // eigencone when it has one
      RMat reps = rays;
      if (rays.size() > 1) {
        RVec sum(rays[0].size(), Rational(0));
        for (const RVec& r : rays) sum = radd(sum, r);
        reps.push_back(sum);
      }
      for (const RVec& r : reps) {
        EigenPair pair;
        pair.exact = true;
        pair.exact_ray = r;
        pair.exact_lambda = *c;
        pair.lambda = to_double(*c);
        pair.x = to_eigen(r).normalized();
        pair.residual = 0.0;
        pair.method = EigenPair::Method::region_oracle;
        pair.region_indices = {static_cast<int>(i)};
        pair.location = cone.solid() && cone.interior_contains_exact(r)
                            ? EigenPair::Location::interior
                            : EigenPair::Location::boundary;
        merge_or_insert(report.pairs, std::move(pair));
      }
      continue;
    }
    const Eigen::MatrixXd mf = to_eigen(region.matrix);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(mf);
    for (Eigen::Index e = 0; e < solver.eigenvalues().size(); ++e) {
      const std::complex<double> lam = solver.eigenvalues()[e];
      if (std::abs(lam.imag()) > 1e-9 * std::max(1.0, std::abs(lam.real()))) continue;
      Eigen::VectorXcd vc = solver.eigenvectors().col(e);
      if (vc.imag().cwiseAbs().maxCoeff() > 1e-8) continue;
      Eigen::VectorXd v = vc.real();
      if (v.norm() < 1e-12) continue;
      v.normalize();
      for (int sgn : {+1, -1}) {
        const Eigen::VectorXd u = sgn * v;
        if (!region.closure_contains(u, 1e-9)) continue;
        if (!cone.contains(u, 1e-9)) continue;
        EigenPair pair;
        pair.lambda = lam.real();
        pair.x = u;
        pair.residual = (mf * u - lam.real() * u).norm();
        pair.method = EigenPair::Method::region_oracle;
        pair.region_indices = {static_cast<int>(i)};
        pair.location = cone.solid() && cone.interior_contains(u)
                            ? EigenPair::Location::interior
                            : EigenPair::Location::boundary;
        try_certify(map, pair);
        merge_or_insert(report.pairs, std::move(pair));
        break;  // the sign inside the cone is unique for a pointed cone
      }
    }
  }

  report.exact = !report.pairs.empty();
  for (const EigenPair& p : report.pairs) report.exact = report.exact && p.exact;
  for (const EigenPair& p : report.pairs) {
    if (p.lambda < -1e-12) continue;
    const double lam = p.exact ? to_double(*p.exact_lambda) : p.lambda;
    if (!report.r_hat_found || lam > report.r_hat) {
      report.r_hat = lam;
      report.r_hat_found = true;
    }
  }
  if (!report.r_hat_found) report.r_hat = 0.0;
  return report;
}

std::vector<RegionEigenPair> enumerate_eigenpairs_regions(const ConeMap& map) {
  if (map.dim() > 3)
    throw std::invalid_argument("eigen oracle restricted to low dimension");
  auto pw = piecewise_form(map);
  if (!pw)
    throw std::invalid_argument("eigen oracle requires piecewise-conical-linear structure");
  const PolyhedralCone& cone = map.domain();

  std::vector<RegionEigenPair> out;
  auto insert = [&out](RegionEigenPair cand) {
    for (RegionEigenPair& p : out) {
      if (std::abs(p.x.dot(cand.x)) > 1.0 - 1e-9 &&
          std::abs(p.lambda - cand.lambda) <= 1e-7 * std::max(1.0, std::abs(p.lambda))) {
        for (int r : cand.region_indices)
          if (std::find(p.region_indices.begin(), p.region_indices.end(), r) ==
              p.region_indices.end())
            p.region_indices.push_back(r);
        p.region_boundary = p.region_boundary || p.region_indices.size() > 1;
        return;
      }
    }
    out.push_back(std::move(cand));
  };

  for (std::size_t i = 0; i < pw->regions().size(); ++i) {
    const ConicRegion& region = pw->regions()[i];
    std::vector<std::pair<double, Eigen::VectorXd>> found;
    if (auto c = scaled_identity_factor(region.matrix)) {
      for (const RVec& r : pw->region_cone_rays()[i])
        found.emplace_back(to_double(*c), to_eigen(r).normalized());
      for (const RVec& r : pw->region_cone_rays()[i]) {
        const Eigen::VectorXd neg = -to_eigen(r).normalized();
        if (region.closure_contains(neg, 1e-9)) found.emplace_back(to_double(*c), neg);
      }
    } else {
      const Eigen::MatrixXd mf = to_eigen(region.matrix);
      Eigen::EigenSolver<Eigen::MatrixXd> solver(mf);
      for (Eigen::Index e = 0; e < solver.eigenvalues().size(); ++e) {
        const std::complex<double> lam = solver.eigenvalues()[e];
        if (std::abs(lam.imag()) > 1e-9 * std::max(1.0, std::abs(lam.real()))) continue;
        Eigen::VectorXcd vc = solver.eigenvectors().col(e);
        if (vc.imag().cwiseAbs().maxCoeff() > 1e-8) continue;
        Eigen::VectorXd v = vc.real();
        if (v.norm() < 1e-12) continue;
        v.normalize();
        for (int sgn : {+1, -1})
          if (region.closure_contains(sgn * v, 1e-9)) found.emplace_back(lam.real(), sgn * v);
      }
    }
    for (auto& [lam, u] : found) {
      RegionEigenPair pair;
      pair.lambda = lam;
      pair.x = u;
      pair.region_indices = {static_cast<int>(i)};
      const bool plus = cone.contains(u, 1e-9);
      const bool minus = cone.contains(-u, 1e-9);
      pair.stratum = plus   ? RegionEigenPair::Stratum::cone_plus
                     : minus ? RegionEigenPair::Stratum::cone_minus
                             : RegionEigenPair::Stratum::off_cone;
      if (auto ray = rationalize_ray(u)) {
        if (auto rl = rationalize(lam)) {
          if (operator_eq(rmatvec(region.matrix, *ray), rscale(*rl, *ray))) {
            pair.exact = true;
            pair.exact_lambda = *rl;
            pair.lambda = to_double(*rl);
          }
        }
      }
      insert(std::move(pair));
    }
  }
  return out;
}

HypothesisVerdict orbit_growth_check(const ConeMap& map, const Eigen::VectorXd& u,
                                     const Eigen::VectorXd& v, const Eigen::VectorXd& w,
                                     double M, int p, double eps, int k_max) {
  const PolyhedralCone& cone = map.domain();
  const double scale = std::max({1.0, u.norm(), v.norm(), w.norm()});
  if (M <= 0) throw std::invalid_argument("orbit_growth_check: (A1) requires M > 0");
  if (p < 1) throw std::invalid_argument("orbit_growth_check: (A1) requires integer p >= 1");
  if (eps <= 0) throw std::invalid_argument("orbit_growth_check: eps must be positive");
  if (k_max < 1) throw std::invalid_argument("orbit_growth_check: k_max must be positive");
  if ((u - (v - w)).norm() > kDefaultTol * scale)
    throw std::invalid_argument("orbit_growth_check: (A1) violated: u != v - w");
  if (!cone.contains(v, kDefaultTol * scale) || !cone.contains(w, kDefaultTol * scale))
    throw std::invalid_argument("orbit_growth_check: (A1) violated: v, w must lie in the cone");
  if (u.norm() <= kDefaultTol * scale)
    throw std::invalid_argument("orbit_growth_check: (A1) violated: u = 0");
  if (cone.contains(-u, kDefaultTol * scale))
    throw std::invalid_argument("orbit_growth_check: (A1) violated: -u lies in the cone");
  Eigen::VectorXd tpu;
  try {
    tpu = map.apply_pow(u, p);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("orbit_growth_check: (A1) violated: T^p undefined at u");
  }
  if (!cone.contains(M * tpu - u, kDefaultTol * scale))
    throw std::invalid_argument("orbit_growth_check: (A1) violated: M T^p(u) does not dominate u");

  const double alpha = std::pow(M + eps, 1.0 / p);
  const double log_rate = std::log1p(eps / M);
  Eigen::VectorXd z = v;
  double log_scale = 0.0;  // true iterate = z * exp(log_scale)
  for (int k = 1; k <= k_max; ++k) {
    for (int step = 0; step < p; ++step) {
      z = alpha * map.apply(z);
      const double nz = z.norm();
      if (!std::isfinite(nz)) throw std::runtime_error("orbit_growth_check: NaN in orbit");
      if (nz > 1e100) {
        log_scale += std::log(nz);
        z /= nz;
      }
    }
    const double factor = std::exp(k * log_rate - log_scale);
    const Eigen::VectorXd gap = z - factor * u;
    if (!cone.contains(gap, kDefaultTol * std::max(1.0, z.norm()))) {
      HypothesisVerdict fail = make_fail(Hypothesis::orbit_growth, rvec_of(z),
                                         "growth bound violated at k = " + std::to_string(k));
      fail.beta = static_cast<double>(k);
      return fail;
    }
  }
  return make_pass(Hypothesis::orbit_growth, Verdict::pass_certified,
                   "S^{kp}(v) dominated (1+eps/M)^k u for every k = 1.." +
                       std::to_string(k_max) + " (finite-horizon surrogate)");
}

SpectralReport spectral_report(const ConeMap& map, int n_max, int budget, unsigned seed) {
  SpectralReport report;
  report.cone_norm = cone_norm(map, budget, seed);
  report.bonsall = bonsall_radius(map, n_max, budget, seed);

  const PolyhedralCone& cone = map.domain();
  std::vector<std::pair<std::string, Eigen::VectorXd>> probes;
  const auto& gens = cone.generators_unit();
  for (Eigen::Index j = 0; j < gens.cols(); ++j)
    probes.emplace_back("ray_" + std::to_string(j), gens.col(j));
  probes.emplace_back("interior", to_eigen(cone.interior_point()).normalized());
  try {
    // a fixed ray is the tightest mu probe: its increments are exactly log(lambda)
    if (auto pair = power_iteration(map, to_eigen(cone.interior_point()), 2000, 1e-13))
      probes.emplace_back("dominant", pair->x);
  } catch (const std::exception&) {
  }
  for (auto& [id, x] : probes) report.local_mu[id] = local_mu(map, x, n_max);

  double mu_max = 0.0;
  for (auto& [id, est] : report.local_mu) mu_max = std::max(mu_max, est.value);

  bool oracle_ok = false;
  if (map.dim() <= 3) {
    try {
      PwlEigenReport oracle = enumerate_eigenpairs_pwl(map);
      if (oracle.r_hat_found) {
        report.eigen_radius = Estimate{oracle.r_hat, oracle.exact ? "exact" : "sampled",
                                       static_cast<int>(oracle.pairs.size()), 0.0};
        report.eigen_radius_found = true;
        oracle_ok = true;
      }
    } catch (const std::invalid_argument&) {
    }
  }
  if (!oracle_ok) {
    // fall back to the best power-iteration eigenpair
    try {
      if (auto pair = power_iteration(map, to_eigen(cone.interior_point()), 1000, 1e-12)) {
        report.eigen_radius = Estimate{pair->lambda, "iterative", n_max, pair->residual};
        report.eigen_radius_found = true;
        report.notes = "eigen radius from power iteration (oracle unavailable)";
      }
    } catch (const std::exception&) {
      report.notes = "eigen radius unavailable";
    }
  }
  report.chain_consistent =
      !report.eigen_radius_found ||
      (report.eigen_radius.value <= mu_max + report.chain_tol &&
       mu_max <= report.bonsall.estimate.value + report.chain_tol);
  return report;
}

}  // namespace conespec
