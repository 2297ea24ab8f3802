#include "conespec/cone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conespec {

bool is_leq_relation(OrderRelation r) {
  return r == OrderRelation::equal || r == OrderRelation::leq || r == OrderRelation::lt ||
         r == OrderRelation::strictly_lt_interior;
}

bool is_lt_relation(OrderRelation r) {
  return r == OrderRelation::lt || r == OrderRelation::strictly_lt_interior;
}

const char* to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::incomparable: return "incomparable";
    case OrderRelation::equal: return "equal";
    case OrderRelation::leq: return "leq";
    case OrderRelation::lt: return "lt";
    case OrderRelation::strictly_lt_interior: return "strictly_lt_interior";
    case OrderRelation::geq: return "geq";
    case OrderRelation::gt: return "gt";
    case OrderRelation::strictly_gt_interior: return "strictly_gt_interior";
  }
  return "?";
}

namespace {

void push_if_new_ray(RMat& rays, const RVec& candidate) {
  for (const RVec& r : rays)
    if (same_ray(r, candidate)) return;
  rays.push_back(canonical_ray(candidate));
}

bool all_nonneg(const RMat& normals, const RVec& x) {
  for (const RVec& a : normals)
    if (rdot(a, x) < 0) return false;
  return true;
}

}  // namespace

RMat enumerate_extreme_rays(const RMat& normals, int dim) {
  RMat rays;
  if (dim == 1) {
    for (int sgn : {+1, -1}) {
      RVec r{Rational(sgn)};
      if (all_nonneg(normals, r)) push_if_new_ray(rays, r);
    }
    return rays;
  }
  const int m = static_cast<int>(normals.size());
  const int need = dim - 1;
  if (m < need) return rays;
  // iterate over all (dim-1)-subsets of the normals
  std::vector<int> comb(static_cast<std::size_t>(need));
  for (int i = 0; i < need; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    RMat active;
    for (int i : comb) active.push_back(normals[static_cast<std::size_t>(i)]);
    RMat null = rational_nullspace(active, dim);
    if (null.size() == 1) {
      for (int sgn : {+1, -1}) {
        RVec r = sgn == 1 ? null[0] : rneg(null[0]);
        if (!all_nonneg(normals, r)) continue;
        // extreme ray: active normals at r must have rank dim-1
        RMat at;
        for (const RVec& a : normals)
          if (rdot(a, r) == 0) at.push_back(a);
        if (rational_rank(at) == dim - 1) push_if_new_ray(rays, r);
      }
    }
    // next combination
    int k = need - 1;
    while (k >= 0 && comb[static_cast<std::size_t>(k)] == m - need + k) --k;
    if (k < 0) break;
    ++comb[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < need; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return rays;
}

PolyhedralCone PolyhedralCone::orthant(int dim) {
  if (dim < 1) throw std::invalid_argument("orthant: dimension must be positive");
  return PolyhedralCone(dim, rmat_identity(dim), Tag::orthant);
}

PolyhedralCone PolyhedralCone::from_facets(int dim, RMat facet_normals) {
  return PolyhedralCone(dim, std::move(facet_normals), Tag::general);
}

PolyhedralCone::PolyhedralCone(int dim, RMat facets, Tag tag)
    : dim_(dim), tag_(tag), facets_(std::move(facets)) {
  if (dim_ < 1) throw std::invalid_argument("cone: dimension must be positive");
  if (facets_.empty()) throw std::invalid_argument("cone: facet normal list is empty");
  for (const RVec& a : facets_) {
    if (static_cast<int>(a.size()) != dim_)
      throw std::invalid_argument("cone: facet normal has wrong dimension");
    if (is_zero(a)) throw std::invalid_argument("cone: zero facet normal");
  }
  if (rational_rank(facets_) != dim_)
    throw std::invalid_argument("cone: not pointed (facet normals do not span R^n)");

  if (tag_ == Tag::orthant)
    generators_ = rmat_identity(dim_);
  else
    generators_ = enumerate_extreme_rays(facets_, dim_);
  if (generators_.empty()) throw std::invalid_argument("cone: trivial (no nonzero member)");

  interior_point_ = RVec(static_cast<std::size_t>(dim_), Rational(0));
  for (const RVec& g : generators_) interior_point_ = radd(interior_point_, g);
  solid_ = true;
  for (const RVec& a : facets_)
    if (rdot(a, interior_point_) <= 0) solid_ = false;
  if (rational_rank(generators_) != dim_) solid_ = false;

  facets_unit_.resize(static_cast<Eigen::Index>(facets_.size()), dim_);
  for (std::size_t i = 0; i < facets_.size(); ++i)
    facets_unit_.row(static_cast<Eigen::Index>(i)) = to_eigen(facets_[i]).normalized().transpose();
  generators_unit_.resize(dim_, static_cast<Eigen::Index>(generators_.size()));
  for (std::size_t j = 0; j < generators_.size(); ++j)
    generators_unit_.col(static_cast<Eigen::Index>(j)) = to_eigen(generators_[j]).normalized();

  facet_gens_.resize(facets_.size());
  for (std::size_t f = 0; f < facets_.size(); ++f)
    for (std::size_t g = 0; g < generators_.size(); ++g)
      if (rdot(facets_[f], generators_[g]) == 0)
        facet_gens_[f].push_back(static_cast<int>(g));
}

std::vector<int> PolyhedralCone::facet_generator_indices(int facet) const {
  return facet_gens_.at(static_cast<std::size_t>(facet));
}

const RVec& PolyhedralCone::interior_point() const {
  if (!solid_) throw std::invalid_argument("cone has empty interior");
  return interior_point_;
}

bool PolyhedralCone::contains(const Eigen::VectorXd& x, double tol) const {
  if (x.size() != dim_) throw std::invalid_argument("contains: dimension mismatch");
  return ((facets_unit_ * x).array() >= -tol).all();
}

bool PolyhedralCone::contains_exact(const RVec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("contains: dimension mismatch");
  return all_nonneg(facets_, x);
}

bool PolyhedralCone::interior_contains(const Eigen::VectorXd& x, double tol) const {
  if (x.size() != dim_) throw std::invalid_argument("interior_contains: dimension mismatch");
  if (!solid_) throw std::invalid_argument("cone has empty interior");
  const double nx = x.norm();
  if (nx == 0.0) return false;
  return ((facets_unit_ * x).array() > tol * nx).all();
}

bool PolyhedralCone::interior_contains_exact(const RVec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("interior_contains: dimension mismatch");
  if (!solid_) throw std::invalid_argument("cone has empty interior");
  for (const RVec& a : facets_)
    if (rdot(a, x) <= 0) return false;
  return true;
}

bool PolyhedralCone::on_boundary(const Eigen::VectorXd& x, double tol) const {
  return contains(x, tol) && !interior_contains(x, tol);
}

bool PolyhedralCone::on_boundary_exact(const RVec& x) const {
  return contains_exact(x) && !interior_contains_exact(x);
}

std::vector<int> PolyhedralCone::active_facets(const Eigen::VectorXd& x, double tol) const {
  std::vector<int> out;
  const double s = std::max(1.0, x.norm());
  Eigen::VectorXd d = facets_unit_ * x;
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (std::abs(d[i]) <= tol * s) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> PolyhedralCone::active_facets_exact(const RVec& x) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (rdot(facets_[i], x) == 0) out.push_back(static_cast<int>(i));
  return out;
}

OrderRelation PolyhedralCone::compare(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                      double tol) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("compare: dimension mismatch");
  const double s = std::max({1.0, x.norm(), y.norm()});
  const Eigen::VectorXd d = y - x;
  if (d.norm() <= tol * s) return OrderRelation::equal;
  const bool fwd = contains(d, tol * s);
  const bool rev = contains(-d, tol * s);
  if (fwd && rev) return OrderRelation::equal;  // pointedness within tolerance
  if (fwd)
    return (solid_ && interior_contains(d, tol)) ? OrderRelation::strictly_lt_interior
                                                 : OrderRelation::lt;
  if (rev)
    return (solid_ && interior_contains(-d, tol)) ? OrderRelation::strictly_gt_interior
                                                  : OrderRelation::gt;
  return OrderRelation::incomparable;
}

OrderRelation PolyhedralCone::compare_exact(const RVec& x, const RVec& y) const {
  const RVec d = rsub(y, x);
  if (is_zero(d)) return OrderRelation::equal;
  if (contains_exact(d))
    return (solid_ && interior_contains_exact(d)) ? OrderRelation::strictly_lt_interior
                                                  : OrderRelation::lt;
  if (contains_exact(rneg(d)))
    return (solid_ && interior_contains_exact(rneg(d))) ? OrderRelation::strictly_gt_interior
                                                        : OrderRelation::gt;
  return OrderRelation::incomparable;
}

std::optional<DualFunctional> PolyhedralCone::semi_strong_witness(const Eigen::VectorXd& x,
                                                                  const Eigen::VectorXd& v,
                                                                  double tol) const {
  if (x.size() != dim_ || v.size() != dim_)
    throw std::invalid_argument("semi_strong_witness: dimension mismatch");
  const double nx = x.norm();
  if (nx == 0.0 || !on_boundary(x, tol))
    throw std::invalid_argument("semi_strong_witness: x must be a nonzero boundary point");
  const double nv = v.norm();
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const Eigen::VectorXd a = facets_unit_.row(static_cast<Eigen::Index>(i)).transpose();
    if (std::abs(a.dot(x)) <= tol * nx && a.dot(v) > tol * nv)
      return DualFunctional{a, facets_[i], static_cast<int>(i)};
  }
  return std::nullopt;
}

std::optional<int> PolyhedralCone::semi_strong_witness_exact(const RVec& x, const RVec& v) const {
  if (is_zero(x) || !on_boundary_exact(x))
    throw std::invalid_argument("semi_strong_witness: x must be a nonzero boundary point");
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (rdot(facets_[i], x) == 0 && rdot(facets_[i], v) > 0) return static_cast<int>(i);
  return std::nullopt;
}

double PolyhedralCone::normality_constant(int budget, unsigned seed) const {
  if (tag_ == Tag::orthant) return 1.0;  // coordinates only add
  std::mt19937_64 rng(seed);
  double gamma = 1.0;
  auto pair_value = [](const Eigen::VectorXd& x, const Eigen::VectorXd& u) {
    // min over t >= 0 of ||x + t*u|| for unit x, u
    const double c = x.dot(u);
    if (c >= 0.0) return 1.0;
    return std::sqrt(std::max(0.0, 1.0 - c * c));
  };
  const auto ng = static_cast<Eigen::Index>(generators_.size());
  for (Eigen::Index i = 0; i < ng; ++i)
    for (Eigen::Index j = 0; j < ng; ++j)
      gamma = std::min(gamma, pair_value(generators_unit_.col(i), generators_unit_.col(j)));
  for (int k = 0; k < budget; ++k) {
    const Eigen::VectorXd x = sample_unit(rng);
    const Eigen::VectorXd u = sample_unit(rng);
    gamma = std::min(gamma, pair_value(x, u));
  }
  return gamma;
}

Eigen::VectorXd PolyhedralCone::sample_unit(std::mt19937_64& rng) const {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim_);
  while (x.norm() < 1e-12) {
    for (Eigen::Index j = 0; j < generators_unit_.cols(); ++j)
      x += std::abs(gauss(rng)) * generators_unit_.col(j);
  }
  return x.normalized();
}

Rational random_small_rational(std::mt19937_64& rng, bool allow_negative) {
  std::uniform_int_distribution<int> num(allow_negative ? -16 : 0, 16);
  std::uniform_int_distribution<int> dpow(0, 6);
  return Rational(num(rng)) / Rational(1 << dpow(rng));
}

RVec PolyhedralCone::sample_rational(std::mt19937_64& rng) const {
  while (true) {
    RVec x(static_cast<std::size_t>(dim_), Rational(0));
    bool nonzero = false;
    for (const RVec& g : generators_) {
      Rational c = random_small_rational(rng);
      if (c != 0) nonzero = true;
      x = radd(x, rscale(c, g));
    }
    if (nonzero && !is_zero(x)) return x;
  }
}

RVec PolyhedralCone::sample_boundary_rational(std::mt19937_64& rng, int facet) const {
  const auto& gens = facet_gens_.at(static_cast<std::size_t>(facet));
  if (gens.empty())
    throw std::invalid_argument("facet has no extreme rays (boundary face is trivial)");
  while (true) {
    RVec x(static_cast<std::size_t>(dim_), Rational(0));
    bool nonzero = false;
    for (int gi : gens) {
      Rational c = random_small_rational(rng);
      if (c != 0) nonzero = true;
      x = radd(x, rscale(c, generators_[static_cast<std::size_t>(gi)]));
    }
    if (nonzero && !is_zero(x)) return x;
  }
}

}  // namespace conespec
