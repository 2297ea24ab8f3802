#pragma once

#include "conespec/maps.hpp"
#include "conespec/spectral.hpp"
#include "conespec/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conespec {

/// Eigenstructure of a superadditive map on both cones plus the off-cone
/// spectrum, with the orderings lambda_minus >= lambda_plus and
/// |lambda| <= lambda_plus checked on every certified eigenvalue.
struct SuperadditiveAnalysis {
  EigenPair pair_plus;                  // in the cone
  EigenPair pair_minus;                 // in the negative cone (x stored negated)
  std::vector<RegionEigenPair> other_eigs;  // off both cones (oracle sweep)
  HypothesisVerdict b1;
  bool ordering_ok = false;        // lambda_minus >= lambda_plus - tol
  bool bound_ok = false;           // |lambda| <= lambda_plus + tol for off-cone eigenvalues
  bool uniqueness_checked = false; // multistart ran (requires B1 pass)
  bool uniqueness_ok = false;      // all converged cone eigenvectors coincide
  int multistart_converged = 0;
  double multistart_max_deviation = 0.0;
  double tol = 1e-9;
  std::string notes;
};

/// Full analysis of a structurally superadditive positive map: cone eigenpair
/// by multistart power iteration (with the region oracle as a cross-check in
/// dimension <= 3), the negative-cone eigenpair through S(x) = -T(-x), the
/// off-cone spectrum from the region oracle, and the ordering checks.
/// Throws when superadditivity is not structurally certified, the map is not
/// positive, or the Bonsall estimate is not positive.
SuperadditiveAnalysis analyze_superadditive(const ConeMap& map, int budget = 50,
                                            unsigned seed = 1);

/// Diagnostic for two claimed distinct unit cone eigenvectors of a
/// superadditive map under B1: computes the critical alpha with
/// x0 - alpha*y0 on the cone boundary and reports the contradiction.
struct BoundaryRayCertificate {
  double alpha = 0.0;
  Eigen::VectorXd boundary_point;  // x0 - alpha*y0
  bool duplicate = false;          // the difference vanished: same eigenvector
  bool degenerate = false;         // alpha = 0: y0 has support outside x0
  bool contradiction_verified = false;  // T(z) <= lambda*z at the boundary point
  double beta = 0.0;               // feasible beta violating (B1) at z
  std::string detail;
};

BoundaryRayCertificate uniqueness_via_boundary_ray(const ConeMap& map,
                                                   const Eigen::VectorXd& x0,
                                                   const Eigen::VectorXd& y0,
                                                   double tol = 1e-9);

/// |eig.lambda| <= pair_plus.lambda + tol for a certified off-cone eigenpair.
/// Throws "wrong stratum" when eig.x lies in the cone or its negative.
bool eigenvalue_bound_check(const ConeMap& map, const EigenPair& pair_plus,
                            const RegionEigenPair& eig, double tol = 1e-9);

}  // namespace conespec
