#pragma once

#include "conespec/cone.hpp"
#include "conespec/maps.hpp"
#include "conespec/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conespec {

/// Exact decision of "exists beta > 0 with d - beta*image in the cone" for a
/// boundary direction d. The feasible set is an interval (0, beta_sup], so the
/// quantifier reduces to the facets active at d: feasible iff <a, image> <= 0
/// for every active facet a. beta_sup is the exact least upper bound (nullopt
/// when no facet constrains beta).
struct SupportReduction {
  bool violated = false;  // some beta > 0 is feasible
  std::optional<Rational> beta_sup;
  std::optional<int> witness_facet;  // active facet with <a, image> > 0 (the SSP/SSI witness)
};

SupportReduction support_reduction(const PolyhedralCone& cone, const RVec& d, const RVec& image);

/// Brute secondary oracle: exact membership of d - beta*image over the
/// geometric grid beta in {2^-20, ..., 2^4}.
bool beta_grid_feasible(const PolyhedralCone& cone, const RVec& d, const RVec& image,
                        int* found_exponent = nullptr);

// -- hypothesis checkers ---------------------------------------------------------

/// (A1): u = v - w with v, w in the cone, u != 0, -u not in the cone, and
/// M T^p(u) >= u. Every clause is directly evaluable; verdict is certified.
HypothesisVerdict check_A1(const ConeMap& map, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v, const Eigen::VectorXd& w, double M, int p);

/// (A2): the orbit of x is unbounded. Finite-horizon surrogate: pass when the
/// orbit norm exceeds bound_threshold, fail when the orbit verifiably converges
/// to a fixed point below the threshold, unknown otherwise.
HypothesisVerdict check_A2_orbit(const ConeMap& map, const Eigen::VectorXd& x,
                                 double bound_threshold = 1e6, int k_max = 64);

/// (B1): x - beta T(x) stays outside the cone for every boundary x and beta>0.
/// Exact combinatorial certificate for linear maps on the orthant; otherwise
/// sampled boundary points decided by the exact support reduction with the
/// beta-grid as a guard oracle. Throws if T is not positive.
HypothesisVerdict check_B1(const ConeMap& map, int budget = 512, unsigned seed = 1);

/// (B2): same with differences x - y on the boundary and T(x) - T(y).
HypothesisVerdict check_B2(const ConeMap& map, int budget = 512, unsigned seed = 1);

/// Semi-strong positivity: every nonzero boundary x admits a dual functional
/// with <a, T(x)> > 0 = <a, x> (facet normals suffice on polyhedral cones).
HypothesisVerdict check_SSP(const ConeMap& map, int budget = 512, unsigned seed = 1);

/// Semi-strongly increasing: the same for differences x - y on the boundary.
HypothesisVerdict check_SSI(const ConeMap& map, int budget = 512, unsigned seed = 1);

// -- implication audit -------------------------------------------------------------

struct ImplicationCheck {
  std::string name;
  bool antecedent = false;
  bool consequent = false;
  bool violated = false;  // antecedent held, consequent did not: artifact bug
};

struct ImplicationAuditReport {
  HypothesisVerdict ssp, b1, b2, ssi;
  bool superadditive_certified = false;
  std::vector<ImplicationCheck> implications;
  bool consistent = true;
};

/// Runs all checkers and asserts the implication lattice on the verdicts:
/// SSP => B1, B2 => B1, SSI => B2, and B1 => B2 for structurally-certified
/// superadditive maps. A violated implication is an artifact bug.
ImplicationAuditReport implication_audit(const ConeMap& map, int budget = 512, unsigned seed = 1);

}  // namespace conespec
