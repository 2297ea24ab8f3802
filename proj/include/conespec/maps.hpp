#pragma once

#include "conespec/cone.hpp"
#include "conespec/rational.hpp"
#include "conespec/verdict.hpp"

#include <Eigen/Core>

#include <memory>
#include <optional>
#include <vector>

namespace conespec {

/// One piece of a piecewise-conical-linear map: a conic region carved out by
/// strict (<a,x> > 0) and weak (<a,x> >= 0) inequalities, with the matrix that
/// applies there. Regions are listed in priority order; ties go to the first
/// region whose closure contains the point.
struct ConicRegion {
  RMat strict;
  RMat weak;
  RMat matrix;

  bool contains_exact(const RVec& x) const;
  bool closure_contains_exact(const RVec& x) const;
  bool contains(const Eigen::VectorXd& x, double tol) const;
  bool closure_contains(const Eigen::VectorXd& x, double tol) const;
};

/// A continuous 1-homogeneous map on a polyhedral cone (or on all of R^n for
/// the variants that extend). Immutable and shareable; apply is pure.
///
/// Matrices are stored exactly; the float copies exist for the iteration hot
/// path only. Piecewise construction validates continuity across shared
/// boundary rays and partition cover in exact arithmetic.
class ConeMap {
 public:
  enum class Kind { linear, piecewise, min_of_linear, max_of_linear, composition, scaled };

  static ConeMap linear(RMat a, PolyhedralCone cone);
  static ConeMap piecewise(std::vector<ConicRegion> regions, PolyhedralCone cone,
                           bool covers_space = false);
  static ConeMap min_of_linear(std::vector<RMat> mats, PolyhedralCone cone);
  static ConeMap max_of_linear(std::vector<RMat> mats, PolyhedralCone cone);
  static ConeMap composition(std::vector<ConeMap> parts);  // apply right-to-left
  static ConeMap scaled(Rational c, ConeMap inner);

  Kind kind() const { return kind_; }
  int dim() const { return cone_.dim(); }
  const PolyhedralCone& domain() const { return cone_; }

  /// True when the map is defined on all of R^n (linear, min/max of linear,
  /// and compositions/scalings thereof). Piecewise maps live on the cone only.
  bool defined_on_space() const { return on_space_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x, double tol = kDefaultTol) const;
  RVec apply_exact(const RVec& x) const;

  Eigen::VectorXd apply_pow(const Eigen::VectorXd& x, int p, double tol = kDefaultTol) const;
  RVec apply_pow_exact(const RVec& x, int p) const;

  // structure access
  const RMat& matrix() const;                      // linear
  const std::vector<ConicRegion>& regions() const; // piecewise
  const std::vector<RMat>& matrices() const;       // min/max of linear
  const std::vector<ConeMap>& parts() const;       // composition
  const Rational& scale() const;                   // scaled
  const ConeMap& inner() const;                    // scaled

  /// Extreme rays of each region's closure intersected with the domain cone
  /// (empty for non-piecewise maps).
  const std::vector<RMat>& region_cone_rays() const { return region_rays_; }

  /// Product matrix when the whole map collapses to a single linear map.
  std::optional<RMat> linear_collapse() const;

  /// Equivalent piecewise form: linear becomes one region, min/max of linear
  /// become argmin/argmax pattern regions covering R^n, scaled wraps the inner
  /// form. Compositions (that do not collapse to linear) have none.
  std::optional<ConeMap> as_piecewise() const;

  /// S(x) = -T(-x). Structural: linear/composition map to themselves, min and
  /// max of linear swap. Throws for cone-only maps.
  ConeMap negate_conjugate() const;

 private:
  ConeMap(Kind k, PolyhedralCone cone) : kind_(k), cone_(std::move(cone)) {}
  void set_regions(std::vector<ConicRegion> regions);  // fills float caches + rays
  void validate_piecewise() const;

  Kind kind_;
  PolyhedralCone cone_;
  bool on_space_ = false;

  RMat matrix_;
  Eigen::MatrixXd matrix_f_;
  std::vector<ConicRegion> regions_;
  std::vector<Eigen::MatrixXd> region_mats_f_;
  std::vector<Eigen::MatrixXd> region_strict_f_;
  std::vector<Eigen::MatrixXd> region_weak_f_;
  std::vector<RMat> region_rays_;
  std::vector<RMat> mats_;
  std::vector<Eigen::MatrixXd> mats_f_;
  std::vector<ConeMap> parts_;
  Rational scale_ = 1;
  std::shared_ptr<const ConeMap> inner_;
};

// -- classified properties -----------------------------------------------------

enum class PositivityGrade { not_positive, positive, strictly_positive, strongly_positive };
const char* to_string(PositivityGrade g);

struct PositivityResult {
  PositivityGrade grade;
  bool certified;  // structural certificate vs sampled verdict
  std::optional<RVec> witness;  // violating x for the grade above the verdict
  std::string detail;
};

/// Exact certificate for (compositions of) linear maps on the orthant;
/// sampled over random cone points plus all boundary and region rays otherwise.
PositivityResult classify_positivity(const ConeMap& map, int budget = 512, unsigned seed = 1);

enum class OrderMode { weak, strict, strong };
const char* to_string(OrderMode m);

/// Exact certificate for linear maps on the orthant in weak mode; otherwise
/// sampled pairs y = x + d with the difference d swept over facet rays, region
/// rays and random cone points (violations of the strict/strong grades live on
/// boundary directions).
HypothesisVerdict check_order_preserving(const ConeMap& map, OrderMode mode, int budget = 512,
                                         unsigned seed = 1);

enum class SuperadditiveScope { on_cone, on_space };

/// Structural certificate for linear (additive) and min-of-linear (concave,
/// 1-homogeneous) maps; sampled pairs otherwise.
HypothesisVerdict check_superadditive(const ConeMap& map, SuperadditiveScope scope,
                                      int budget = 512, unsigned seed = 1);

}  // namespace conespec
