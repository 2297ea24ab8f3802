#pragma once

#include "conespec/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <random>
#include <vector>

namespace conespec {

inline constexpr double kDefaultTol = 1e-9;

/// Relation of an ordered pair (x, y) under the cone order.
/// The reverse-direction values mirror the forward ones so that a pair with
/// x strictly above y is distinguishable from a genuinely incomparable pair.
enum class OrderRelation {
  incomparable,
  equal,
  leq,
  lt,
  strictly_lt_interior,
  geq,
  gt,
  strictly_gt_interior,
};

bool is_leq_relation(OrderRelation r);   // equal, leq, lt, strictly_lt_interior
bool is_lt_relation(OrderRelation r);    // lt, strictly_lt_interior
const char* to_string(OrderRelation r);

/// A dual-cone functional x -> <a, x>, represented by its vector.
struct DualFunctional {
  Eigen::VectorXd vector;
  RVec exact;
  int facet_index = -1;
};

/// Enumerates the extreme rays of {x : <a, x> >= 0 for every row a}.
/// The set must be pointed (rows of full rank); the result may be empty.
RMat enumerate_extreme_rays(const RMat& normals, int dim);

/// A closed convex polyhedral cone {x : <a, x> >= 0 for every facet normal a}.
///
/// Immutable after construction; all queries are pure and thread-safe.
/// Construction validates the cone axioms: nontrivial (contains a nonzero
/// vector) and pointed (facet normals span R^n).
class PolyhedralCone {
 public:
  enum class Tag { orthant, general };

  static PolyhedralCone orthant(int dim);
  static PolyhedralCone from_facets(int dim, RMat facet_normals);

  int dim() const { return dim_; }
  Tag tag() const { return tag_; }
  bool solid() const { return solid_; }

  const RMat& facet_normals() const { return facets_; }
  const Eigen::MatrixXd& facet_normals_unit() const { return facets_unit_; }
  const RMat& generators() const { return generators_; }
  const Eigen::MatrixXd& generators_unit() const { return generators_unit_; }

  /// Generators lying on facet f (the extreme rays of that face).
  std::vector<int> facet_generator_indices(int facet) const;

  /// An exact interior point (the sum of all generators); only valid when solid.
  const RVec& interior_point() const;

  // -- membership -------------------------------------------------------------

  bool contains(const Eigen::VectorXd& x, double tol = kDefaultTol) const;
  bool contains_exact(const RVec& x) const;

  /// Strict membership, scale-robust: <a, x> > tol*||x|| for every unit facet
  /// normal a. Throws if the cone has empty interior.
  bool interior_contains(const Eigen::VectorXd& x, double tol = kDefaultTol) const;
  bool interior_contains_exact(const RVec& x) const;

  bool on_boundary(const Eigen::VectorXd& x, double tol = kDefaultTol) const;
  bool on_boundary_exact(const RVec& x) const;

  /// Facets with <a, x> = 0 (exact) or <= tol*||x|| (float).
  std::vector<int> active_facets(const Eigen::VectorXd& x, double tol = kDefaultTol) const;
  std::vector<int> active_facets_exact(const RVec& x) const;

  // -- order ------------------------------------------------------------------

  OrderRelation compare(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                        double tol = kDefaultTol) const;
  OrderRelation compare_exact(const RVec& x, const RVec& y) const;

  /// A facet normal a with <a, x> = 0 (within tol*||x||) and <a, v> > tol*||v||,
  /// if one exists. x must be a nonzero boundary point.
  std::optional<DualFunctional> semi_strong_witness(const Eigen::VectorXd& x,
                                                    const Eigen::VectorXd& v,
                                                    double tol = kDefaultTol) const;
  std::optional<int> semi_strong_witness_exact(const RVec& x, const RVec& v) const;

  // -- constants ---------------------------------------------------------------

  /// Lower-bound estimate of the largest gamma with ||x+y|| >= gamma*||x|| over
  /// the cone. Each sampled pair of directions is minimized over the free scale
  /// of y in closed form. Exactly 1 for the orthant in the Euclidean norm.
  double normality_constant(int budget = 100000, unsigned seed = 1) const;

  // -- sampling -----------------------------------------------------------------

  /// Nonnegative-combination-of-generators point with |N(0,1)| coefficients,
  /// normalized to unit length.
  Eigen::VectorXd sample_unit(std::mt19937_64& rng) const;

  /// Exact-rational cone point: generator combination with small nonnegative
  /// rational coefficients (numerators <= 16, power-of-two denominators <= 64).
  RVec sample_rational(std::mt19937_64& rng) const;

  /// Exact-rational nonzero point on the boundary face of the given facet.
  RVec sample_boundary_rational(std::mt19937_64& rng, int facet) const;

 private:
  PolyhedralCone(int dim, RMat facets, Tag tag);

  int dim_;
  Tag tag_;
  bool solid_ = false;
  RMat facets_;
  Eigen::MatrixXd facets_unit_;  // one row per facet, unit length
  RMat generators_;
  Eigen::MatrixXd generators_unit_;  // one column per generator, unit length
  RVec interior_point_;
  std::vector<std::vector<int>> facet_gens_;
};

/// Random rational in [0, 16] with a power-of-two denominator <= 64.
Rational random_small_rational(std::mt19937_64& rng, bool allow_negative = false);

}  // namespace conespec
