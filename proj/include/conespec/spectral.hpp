#pragma once

#include "conespec/cone.hpp"
#include "conespec/maps.hpp"
#include "conespec/verdict.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conespec {

/// One estimated spectral quantity: value plus how it was obtained.
struct Estimate {
  double value = 0.0;
  std::string method;  // "exact" | "sampled" | "iterative"
  int n = 0;           // iterations or candidate count
  double residual = 0.0;
};

/// (lambda, x) with unit x in the cone (or its negative), plus certificate data.
struct EigenPair {
  double lambda = 0.0;
  Eigen::VectorXd x;
  enum class Location { interior, boundary } location = Location::interior;
  enum class Method { power_iteration, region_oracle } method = Method::power_iteration;
  double residual = 0.0;
  std::vector<int> region_indices;      // incident regions (oracle pairs)
  std::optional<RVec> exact_ray;        // rational ray when exactly certified
  std::optional<Rational> exact_lambda;
  bool exact = false;
};

/// A whole region of eigenvectors for one eigenvalue (region matrix = lambda*I).
struct Eigencone {
  double lambda = 0.0;
  Rational exact_lambda;
  int region_index = -1;
  RMat rays;       // extreme rays of region closure intersected with the cone
  int dimension = 0;  // rational rank of the rays
};

struct PwlEigenReport {
  std::vector<EigenPair> pairs;  // cone eigenpairs, deduplicated across regions
  std::vector<Eigencone> eigencones;
  double r_hat = 0.0;
  bool r_hat_found = false;  // false when no cone eigenpair with lambda >= 0 exists
  bool exact = false;        // every reported pair certified by exact arithmetic
};

struct BonsallResult {
  Estimate estimate;
  std::vector<double> sequence;   // s_n for n = 1..n_max
  double last_rel_change = 0.0;
  int probes = 0;
};

struct SpectralReport {
  Estimate cone_norm;
  BonsallResult bonsall;
  std::map<std::string, Estimate> local_mu;  // probe id -> estimate
  Estimate eigen_radius;
  bool eigen_radius_found = false;
  double chain_tol = 1e-2;
  bool chain_consistent = false;  // eigen_radius <= bonsall + chain_tol
  std::string notes;
};

/// ||T||_+ = sup { ||Tx|| : x in cone, ||x|| <= 1 }.
/// Exact for maps whose regions are scaled-identity or rank-one (the sup is
/// attained on finitely many candidate directions); dimension 2 adds an
/// angular grid with golden-section refinement; sampled otherwise.
Estimate cone_norm(const ConeMap& map, int budget = 512, unsigned seed = 1);

/// Bonsall radius estimate s_n = max over probes of ||T^n x||^{1/n}, with
/// renormalized iterates and accumulated log-norms. Probes include cone and
/// region rays, random unit cone points, power-iteration fixed points, and in
/// dimension 2 a dense angular grid. Errors only on NaN.
BonsallResult bonsall_radius(const ConeMap& map, int n_max = 64, int budget = 256,
                             unsigned seed = 1);

/// mu(x): running value exp(log||T^n x|| / n) with the max over the trailing
/// half of the window as the limsup surrogate.
Estimate local_mu(const ConeMap& map, const Eigen::VectorXd& x, int n_max = 64);

/// Normalized fixed-point iteration; convergence is declared on iterate
/// displacement and the residual is certified post hoc.
std::optional<EigenPair> power_iteration(const ConeMap& map, const Eigen::VectorXd& x0,
                                         int max_iter = 1000, double tol = 1e-12);

/// Exact oracle for piecewise-conical-linear maps in dimension <= 3: solves
/// each region's linear eigenproblem, keeps eigenvectors in region closure and
/// cone, reports scaled-identity regions as eigencones, and deduplicates
/// across shared boundaries.
PwlEigenReport enumerate_eigenpairs_pwl(const ConeMap& map);

/// Every real eigenpair of every region matrix whose eigenvector lies in the
/// region closure, regardless of cone membership (used for the sigma(T) sweep).
struct RegionEigenPair {
  double lambda = 0.0;
  Eigen::VectorXd x;  // unit
  std::vector<int> region_indices;
  enum class Stratum { cone_plus, cone_minus, off_cone } stratum = Stratum::off_cone;
  bool region_boundary = false;  // incident to several regions: stratum may be ambiguous
  bool exact = false;
  std::optional<Rational> exact_lambda;
};
std::vector<RegionEigenPair> enumerate_eigenpairs_regions(const ConeMap& map);

/// Lemma-style finite-horizon growth check: with S = (M+eps)^{1/p} T, verifies
/// S^{kp}(v) >= (1+eps/M)^k u in the cone order for k = 1..k_max. The (A1)
/// data (u = v-w, v,w in cone, -u not in cone, u != 0, M T^p(u) >= u) is
/// verified first and a violation throws with the violated clause.
HypothesisVerdict orbit_growth_check(const ConeMap& map, const Eigen::VectorXd& u,
                                     const Eigen::VectorXd& v, const Eigen::VectorXd& w,
                                     double M, int p, double eps, int k_max);

/// Aggregate report over a standard probe family.
SpectralReport spectral_report(const ConeMap& map, int n_max = 64, int budget = 256,
                               unsigned seed = 1);

}  // namespace conespec
