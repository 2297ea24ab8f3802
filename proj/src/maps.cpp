#include "conespec/maps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace conespec {

namespace {

void require_square(const RMat& a, int dim, const char* what) {
  if (static_cast<int>(a.size()) != dim)
    throw std::invalid_argument(std::string(what) + ": matrix is not " + std::to_string(dim) +
                                "x" + std::to_string(dim));
  for (const RVec& row : a)
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument(std::string(what) + ": ragged matrix row");
}

RMat closure_normals(const ConicRegion& r) {
  RMat out = r.weak;
  out.insert(out.end(), r.strict.begin(), r.strict.end());
  return out;
}

}  // namespace

bool ConicRegion::contains_exact(const RVec& x) const {
  for (const RVec& a : strict)
    if (rdot(a, x) <= 0) return false;
  for (const RVec& a : weak)
    if (rdot(a, x) < 0) return false;
  return true;
}

bool ConicRegion::closure_contains_exact(const RVec& x) const {
  for (const RVec& a : strict)
    if (rdot(a, x) < 0) return false;
  for (const RVec& a : weak)
    if (rdot(a, x) < 0) return false;
  return true;
}

bool ConicRegion::contains(const Eigen::VectorXd& x, double tol) const {
  const double s = std::max(1.0, x.norm());
  for (const RVec& a : strict)
    if (to_eigen(a).dot(x) <= tol * s) return false;
  for (const RVec& a : weak)
    if (to_eigen(a).dot(x) < -tol * s) return false;
  return true;
}

bool ConicRegion::closure_contains(const Eigen::VectorXd& x, double tol) const {
  const double s = std::max(1.0, x.norm());
  for (const RVec& a : strict)
    if (to_eigen(a).dot(x) < -tol * s) return false;
  for (const RVec& a : weak)
    if (to_eigen(a).dot(x) < -tol * s) return false;
  return true;
}

// -- factories -------------------------------------------------------------------

ConeMap ConeMap::linear(RMat a, PolyhedralCone cone) {
  require_square(a, cone.dim(), "linear map");
  ConeMap m(Kind::linear, std::move(cone));
  m.on_space_ = true;
  m.matrix_f_ = to_eigen(a);
  m.matrix_ = std::move(a);
  return m;
}

void ConeMap::set_regions(std::vector<ConicRegion> regions) {
  regions_ = std::move(regions);
  region_mats_f_.clear();
  region_strict_f_.clear();
  region_weak_f_.clear();
  region_rays_.clear();
  const int n = cone_.dim();
  for (const ConicRegion& r : regions_) {
    region_mats_f_.push_back(to_eigen(r.matrix));
    Eigen::MatrixXd s(static_cast<Eigen::Index>(r.strict.size()), n);
    for (std::size_t i = 0; i < r.strict.size(); ++i)
      s.row(static_cast<Eigen::Index>(i)) = to_eigen(r.strict[i]).transpose();
    Eigen::MatrixXd w(static_cast<Eigen::Index>(r.weak.size()), n);
    for (std::size_t i = 0; i < r.weak.size(); ++i)
      w.row(static_cast<Eigen::Index>(i)) = to_eigen(r.weak[i]).transpose();
    region_strict_f_.push_back(std::move(s));
    region_weak_f_.push_back(std::move(w));
    RMat normals = cone_.facet_normals();
    RMat extra = closure_normals(r);
    normals.insert(normals.end(), extra.begin(), extra.end());
    region_rays_.push_back(enumerate_extreme_rays(normals, n));
  }
}

ConeMap ConeMap::piecewise(std::vector<ConicRegion> regions, PolyhedralCone cone,
                           bool covers_space) {
  if (regions.empty()) throw std::invalid_argument("piecewise map: no regions");
  const int n = cone.dim();
  for (const ConicRegion& r : regions) {
    require_square(r.matrix, n, "piecewise map");
    for (const RVec& a : r.strict)
      if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("piecewise map: inequality has wrong dimension");
    for (const RVec& a : r.weak)
      if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("piecewise map: inequality has wrong dimension");
  }
  ConeMap m(Kind::piecewise, std::move(cone));
  m.on_space_ = covers_space;
  m.set_regions(std::move(regions));
  m.validate_piecewise();
  return m;
}

ConeMap ConeMap::min_of_linear(std::vector<RMat> mats, PolyhedralCone cone) {
  if (mats.empty()) throw std::invalid_argument("min_of_linear: no matrices");
  for (const RMat& a : mats) require_square(a, cone.dim(), "min_of_linear");
  ConeMap m(Kind::min_of_linear, std::move(cone));
  m.on_space_ = true;
  for (const RMat& a : mats) m.mats_f_.push_back(to_eigen(a));
  m.mats_ = std::move(mats);
  return m;
}

ConeMap ConeMap::max_of_linear(std::vector<RMat> mats, PolyhedralCone cone) {
  if (mats.empty()) throw std::invalid_argument("max_of_linear: no matrices");
  for (const RMat& a : mats) require_square(a, cone.dim(), "max_of_linear");
  ConeMap m(Kind::max_of_linear, std::move(cone));
  m.on_space_ = true;
  for (const RMat& a : mats) m.mats_f_.push_back(to_eigen(a));
  m.mats_ = std::move(mats);
  return m;
}

ConeMap ConeMap::composition(std::vector<ConeMap> parts) {
  if (parts.empty()) throw std::invalid_argument("composition: no parts");
  const int n = parts.front().dim();
  for (const ConeMap& p : parts)
    if (p.dim() != n) throw std::invalid_argument("composition: dimension mismatch");
  // flatten nested compositions
  std::vector<ConeMap> flat;
  for (ConeMap& p : parts) {
    if (p.kind() == Kind::composition)
      for (const ConeMap& q : p.parts_) flat.push_back(q);
    else
      flat.push_back(std::move(p));
  }
  ConeMap m(Kind::composition, flat.back().domain());
  m.on_space_ = std::all_of(flat.begin(), flat.end(),
                            [](const ConeMap& p) { return p.defined_on_space(); });
  m.parts_ = std::move(flat);
  return m;
}

ConeMap ConeMap::scaled(Rational c, ConeMap inner) {
  if (c < 0) throw std::invalid_argument("scaled: factor must be nonnegative");
  ConeMap m(Kind::scaled, inner.domain());
  m.on_space_ = inner.defined_on_space();
  m.scale_ = std::move(c);
  m.inner_ = std::make_shared<const ConeMap>(std::move(inner));
  return m;
}

void ConeMap::validate_piecewise() const {
  const int n = cone_.dim();
  // continuity: matrices of any two regions agree on every shared boundary ray
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    for (std::size_t j = i + 1; j < regions_.size(); ++j) {
      RMat normals = cone_.facet_normals();
      for (const ConicRegion* r : {&regions_[i], &regions_[j]}) {
        RMat extra = closure_normals(*r);
        normals.insert(normals.end(), extra.begin(), extra.end());
      }
      for (const RVec& g : enumerate_extreme_rays(normals, n)) {
        if (!operator_eq(rmatvec(regions_[i].matrix, g), rmatvec(regions_[j].matrix, g)))
          throw std::invalid_argument(
              "piecewise map: regions " + std::to_string(i) + " and " + std::to_string(j) +
              " disagree on shared boundary ray");
      }
    }
  }
  // partition: sampled cone points covered by some closure, interiors disjoint
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  RMat samples = cone_.generators();
  for (const RMat& rays : region_rays_) samples.insert(samples.end(), rays.begin(), rays.end());
  for (int k = 0; k < 128; ++k) samples.push_back(cone_.sample_rational(rng));
  for (const RVec& x : samples) {
    if (is_zero(x)) continue;
    int covering = 0;
    int strictly = 0;
    for (const ConicRegion& r : regions_) {
      if (r.closure_contains_exact(x)) ++covering;
      bool open = true;
      for (const RVec& a : r.strict)
        if (rdot(a, x) <= 0) open = false;
      for (const RVec& a : r.weak)
        if (rdot(a, x) <= 0) open = false;
      if (open) ++strictly;
    }
    if (covering == 0) throw std::invalid_argument("piecewise map: partition gap at sample");
    if (strictly > 1)
      throw std::invalid_argument("piecewise map: region interiors overlap at sample");
  }
}

// -- evaluation -------------------------------------------------------------------

Eigen::VectorXd ConeMap::apply(const Eigen::VectorXd& x, double tol) const {
  if (x.size() != dim()) throw std::invalid_argument("apply: dimension mismatch");
  if (!on_space_ && !cone_.contains(x, tol * std::max(1.0, x.norm())))
    throw std::invalid_argument("apply: point outside cone");
  switch (kind_) {
    case Kind::linear:
      return matrix_f_ * x;
    case Kind::piecewise: {
      const double s = tol * std::max(1.0, x.norm());
      for (std::size_t i = 0; i < regions_.size(); ++i) {
        if ((region_strict_f_[i].rows() == 0 || ((region_strict_f_[i] * x).array() > s).all()) &&
            (region_weak_f_[i].rows() == 0 || ((region_weak_f_[i] * x).array() >= -s).all()))
          return region_mats_f_[i] * x;
      }
      for (std::size_t i = 0; i < regions_.size(); ++i) {
        if ((region_strict_f_[i].rows() == 0 || ((region_strict_f_[i] * x).array() >= -s).all()) &&
            (region_weak_f_[i].rows() == 0 || ((region_weak_f_[i] * x).array() >= -s).all()))
          return region_mats_f_[i] * x;
      }
      throw std::logic_error("apply: partition gap");
    }
    case Kind::min_of_linear:
    case Kind::max_of_linear: {
      Eigen::VectorXd out = mats_f_[0] * x;
      for (std::size_t i = 1; i < mats_f_.size(); ++i) {
        Eigen::VectorXd v = mats_f_[i] * x;
        out = kind_ == Kind::min_of_linear ? out.cwiseMin(v).eval() : out.cwiseMax(v).eval();
      }
      return out;
    }
    case Kind::composition: {
      Eigen::VectorXd v = x;
      for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) v = it->apply(v, tol);
      return v;
    }
    case Kind::scaled:
      return to_double(scale_) * inner_->apply(x, tol);
  }
  throw std::logic_error("apply: unreachable");
}

RVec ConeMap::apply_exact(const RVec& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw std::invalid_argument("apply: dimension mismatch");
  if (!on_space_ && !cone_.contains_exact(x))
    throw std::invalid_argument("apply: point outside cone");
  switch (kind_) {
    case Kind::linear:
      return rmatvec(matrix_, x);
    case Kind::piecewise: {
      for (const ConicRegion& r : regions_)
        if (r.contains_exact(x)) return rmatvec(r.matrix, x);
      for (const ConicRegion& r : regions_)
        if (r.closure_contains_exact(x)) return rmatvec(r.matrix, x);
      throw std::logic_error("apply: partition gap");
    }
    case Kind::min_of_linear:
    case Kind::max_of_linear: {
      RVec out = rmatvec(mats_[0], x);
      for (std::size_t i = 1; i < mats_.size(); ++i) {
        RVec v = rmatvec(mats_[i], x);
        for (std::size_t j = 0; j < out.size(); ++j)
          if (kind_ == Kind::min_of_linear ? v[j] < out[j] : v[j] > out[j]) out[j] = v[j];
      }
      return out;
    }
    case Kind::composition: {
      RVec v = x;
      for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) v = it->apply_exact(v);
      return v;
    }
    case Kind::scaled:
      return rscale(scale_, inner_->apply_exact(x));
  }
  throw std::logic_error("apply: unreachable");
}

Eigen::VectorXd ConeMap::apply_pow(const Eigen::VectorXd& x, int p, double tol) const {
  Eigen::VectorXd v = x;
  for (int i = 0; i < p; ++i) v = apply(v, tol);
  return v;
}

RVec ConeMap::apply_pow_exact(const RVec& x, int p) const {
  RVec v = x;
  for (int i = 0; i < p; ++i) v = apply_exact(v);
  return v;
}

// -- structure access ---------------------------------------------------------------

const RMat& ConeMap::matrix() const {
  if (kind_ != Kind::linear) throw std::logic_error("matrix(): not a linear map");
  return matrix_;
}

const std::vector<ConicRegion>& ConeMap::regions() const {
  if (kind_ != Kind::piecewise) throw std::logic_error("regions(): not a piecewise map");
  return regions_;
}

const std::vector<RMat>& ConeMap::matrices() const {
  if (kind_ != Kind::min_of_linear && kind_ != Kind::max_of_linear)
    throw std::logic_error("matrices(): not a min/max map");
  return mats_;
}

const std::vector<ConeMap>& ConeMap::parts() const {
  if (kind_ != Kind::composition) throw std::logic_error("parts(): not a composition");
  return parts_;
}

const Rational& ConeMap::scale() const {
  if (kind_ != Kind::scaled) throw std::logic_error("scale(): not a scaled map");
  return scale_;
}

const ConeMap& ConeMap::inner() const {
  if (kind_ != Kind::scaled) throw std::logic_error("inner(): not a scaled map");
  return *inner_;
}

std::optional<RMat> ConeMap::linear_collapse() const {
  switch (kind_) {
    case Kind::linear:
      return matrix_;
    case Kind::scaled: {
      auto in = inner_->linear_collapse();
      if (!in) return std::nullopt;
      return rmat_scale(scale_, *in);
    }
    case Kind::composition: {
      RMat acc = rmat_identity(dim());
      for (const ConeMap& p : parts_) {
        auto in = p.linear_collapse();
        if (!in) return std::nullopt;
        acc = rmatmul(acc, *in);
      }
      return acc;
    }
    case Kind::min_of_linear:
    case Kind::max_of_linear:
      if (mats_.size() == 1) return mats_[0];
      return std::nullopt;
    case Kind::piecewise:
      if (regions_.size() == 1 && regions_[0].strict.empty() && regions_[0].weak.empty())
        return regions_[0].matrix;
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<ConeMap> ConeMap::as_piecewise() const {
  const int n = dim();
  if (kind_ == Kind::piecewise) return *this;
  if (auto a = linear_collapse()) {
    ConeMap m(Kind::piecewise, cone_);
    m.on_space_ = on_space_;
    m.set_regions({ConicRegion{{}, {}, *a}});
    return m;
  }
  if (kind_ == Kind::min_of_linear || kind_ == Kind::max_of_linear) {
    const std::size_t k = mats_.size();
    double count = 1;
    for (int j = 0; j < n; ++j) count *= static_cast<double>(k);
    if (count > 4096) return std::nullopt;
    std::vector<ConicRegion> regions;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
      ConicRegion r;
      r.matrix.resize(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        const std::size_t sel = pick[static_cast<std::size_t>(j)];
        r.matrix[static_cast<std::size_t>(j)] = mats_[sel][static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < k; ++i) {
          if (i == sel) continue;
          // min: chosen row <= others; max: chosen row >= others
          const RVec& chosen = mats_[sel][static_cast<std::size_t>(j)];
          const RVec& other = mats_[i][static_cast<std::size_t>(j)];
          r.weak.push_back(kind_ == Kind::min_of_linear ? rsub(other, chosen)
                                                        : rsub(chosen, other));
        }
      }
      regions.push_back(std::move(r));
      int j = 0;
      for (; j < n; ++j) {
        if (++pick[static_cast<std::size_t>(j)] < k) break;
        pick[static_cast<std::size_t>(j)] = 0;
      }
      if (j == n) break;
    }
    ConeMap m(Kind::piecewise, cone_);
    m.on_space_ = true;
    m.set_regions(std::move(regions));
    return m;
  }
  if (kind_ == Kind::scaled) {
    auto in = inner_->as_piecewise();
    if (!in) return std::nullopt;
    ConeMap m = *in;
    std::vector<ConicRegion> regions = m.regions_;
    for (ConicRegion& r : regions) r.matrix = rmat_scale(scale_, r.matrix);
    m.set_regions(std::move(regions));
    return m;
  }
  return std::nullopt;
}

ConeMap ConeMap::negate_conjugate() const {
  if (!on_space_)
    throw std::invalid_argument("negate_conjugate: map is defined only on the cone");
  switch (kind_) {
    case Kind::linear:
      return *this;
    case Kind::min_of_linear:
      return max_of_linear(mats_, cone_);
    case Kind::max_of_linear:
      return min_of_linear(mats_, cone_);
    case Kind::scaled:
      return scaled(scale_, inner_->negate_conjugate());
    case Kind::composition: {
      std::vector<ConeMap> conj;
      for (const ConeMap& p : parts_) conj.push_back(p.negate_conjugate());
      return composition(std::move(conj));
    }
    case Kind::piecewise: {
      // S evaluates the region of -x with the same matrix: negate the inequalities
      std::vector<ConicRegion> regions = regions_;
      for (ConicRegion& r : regions) {
        for (RVec& a : r.strict) a = rneg(a);
        for (RVec& a : r.weak) a = rneg(a);
      }
      ConeMap m(Kind::piecewise, cone_);
      m.on_space_ = true;
      m.set_regions(std::move(regions));
      return m;
    }
  }
  throw std::logic_error("negate_conjugate: unreachable");
}

// -- classified properties --------------------------------------------------------

const char* to_string(PositivityGrade g) {
  switch (g) {
    case PositivityGrade::not_positive: return "not_positive";
    case PositivityGrade::positive: return "positive";
    case PositivityGrade::strictly_positive: return "strictly_positive";
    case PositivityGrade::strongly_positive: return "strongly_positive";
  }
  return "?";
}

const char* to_string(OrderMode m) {
  switch (m) {
    case OrderMode::weak: return "weak";
    case OrderMode::strict: return "strict";
    case OrderMode::strong: return "strong";
  }
  return "?";
}

namespace {

// Exact sample set: cone generators, region rays, random cone points, and a
// few random points on each boundary face.
RMat positivity_samples(const ConeMap& map, int budget, std::mt19937_64& rng) {
  const PolyhedralCone& cone = map.domain();
  RMat samples = cone.generators();
  auto add_region_rays = [&samples](const ConeMap& pw) {
    for (const RMat& rays : pw.region_cone_rays())
      samples.insert(samples.end(), rays.begin(), rays.end());
  };
  if (map.kind() == ConeMap::Kind::piecewise)
    add_region_rays(map);
  else if (auto pw = map.as_piecewise())
    add_region_rays(*pw);
  const int per_facet =
      std::max(1, budget / (8 * std::max<int>(1, static_cast<int>(cone.facet_normals().size()))));
  for (std::size_t f = 0; f < cone.facet_normals().size(); ++f) {
    if (cone.facet_generator_indices(static_cast<int>(f)).empty()) continue;
    for (int k = 0; k < per_facet; ++k)
      samples.push_back(cone.sample_boundary_rational(rng, static_cast<int>(f)));
  }
  for (int k = 0; k < budget; ++k) samples.push_back(cone.sample_rational(rng));
  return samples;
}

}  // namespace

PositivityResult classify_positivity(const ConeMap& map, int budget, unsigned seed) {
  const PolyhedralCone& cone = map.domain();
  if (!cone.solid()) throw std::invalid_argument("classify_positivity: cone has empty interior");

  if (cone.tag() == PolyhedralCone::Tag::orthant) {
    if (auto a = map.linear_collapse()) {
      const int n = cone.dim();
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          if ((*a)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < 0) {
            RVec witness(static_cast<std::size_t>(n), Rational(0));
            witness[static_cast<std::size_t>(j)] = 1;
            return {PositivityGrade::not_positive, true, witness,
                    "negative entry: image of a basis ray leaves the cone"};
          }
        }
      }
      bool all_pos = true;
      bool zero_col = false;
      for (int j = 0; j < n; ++j) {
        bool col_zero = true;
        for (int i = 0; i < n; ++i) {
          const Rational& v = (*a)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (v == 0) all_pos = false;
          if (v != 0) col_zero = false;
        }
        if (col_zero) zero_col = true;
      }
      if (all_pos)
        return {PositivityGrade::strongly_positive, true, std::nullopt, "all entries positive"};
      if (!zero_col)
        return {PositivityGrade::strictly_positive, true, std::nullopt,
                "nonnegative entries, no zero column"};
      return {PositivityGrade::positive, true, std::nullopt, "nonnegative entries"};
    }
  }

  std::mt19937_64 rng(seed);
  RMat samples = positivity_samples(map, budget, rng);
  PositivityGrade grade = PositivityGrade::strongly_positive;
  for (const RVec& x : samples) {
    if (is_zero(x)) continue;
    RVec y = map.apply_exact(x);
    if (!cone.contains_exact(y))
      return {PositivityGrade::not_positive, true, x, "exact violating witness"};
    if (is_zero(y))
      grade = std::min(grade, PositivityGrade::positive);
    else if (!cone.interior_contains_exact(y))
      grade = std::min(grade, PositivityGrade::strictly_positive);
  }
  return {grade, false, std::nullopt,
          "sampled over " + std::to_string(samples.size()) + " exact cone points"};
}

namespace {

Hypothesis order_hypothesis(OrderMode mode) {
  switch (mode) {
    case OrderMode::weak: return Hypothesis::order_preserving_weak;
    case OrderMode::strict: return Hypothesis::order_preserving_strict;
    case OrderMode::strong: return Hypothesis::order_preserving_strong;
  }
  return Hypothesis::order_preserving_weak;
}

}  // namespace

HypothesisVerdict check_order_preserving(const ConeMap& map, OrderMode mode, int budget,
                                         unsigned seed) {
  const PolyhedralCone& cone = map.domain();
  const Hypothesis hyp = order_hypothesis(mode);
  if (!cone.solid())
    throw std::invalid_argument("check_order_preserving: cone has empty interior");

  if (mode == OrderMode::weak && cone.tag() == PolyhedralCone::Tag::orthant) {
    if (auto a = map.linear_collapse()) {
      const int n = cone.dim();
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if ((*a)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < 0) {
            RVec x(static_cast<std::size_t>(n), Rational(0));
            RVec y = x;
            y[static_cast<std::size_t>(j)] = 1;
            return make_fail_pair(hyp, x, y, "negative entry at row " + std::to_string(i));
          }
        }
      }
      return make_pass(hyp, Verdict::pass_certified, "nonnegative entries");
    }
  }

  // differences to sweep deterministically: facet rays and region rays
  RMat diffs = cone.generators();
  if (map.kind() == ConeMap::Kind::piecewise)
    for (const RMat& rays : map.region_cone_rays())
      diffs.insert(diffs.end(), rays.begin(), rays.end());
  RMat base_points = cone.generators();
  base_points.push_back(cone.interior_point());

  std::mt19937_64 rng(seed);
  auto check_pair = [&](const RVec& x, const RVec& d) -> std::optional<HypothesisVerdict> {
    const RVec y = radd(x, d);
    const RVec u = map.apply_exact(x);
    const RVec v = map.apply_exact(y);
    const RVec delta = rsub(v, u);
    bool ok = true;
    switch (mode) {
      case OrderMode::weak: ok = cone.contains_exact(delta); break;
      case OrderMode::strict: ok = cone.contains_exact(delta) && !is_zero(delta); break;
      case OrderMode::strong: ok = cone.interior_contains_exact(delta); break;
    }
    if (ok) return std::nullopt;
    return make_fail_pair(hyp, x, y,
                          std::string("image difference violates ") + to_string(mode) +
                              " order preservation");
  };

  long checked = 0;
  for (const RVec& d : diffs) {
    if (is_zero(d)) continue;
    for (const RVec& x : base_points) {
      if (auto fail = check_pair(x, d)) return *fail;
      ++checked;
    }
  }
  for (int k = 0; k < budget; ++k) {
    const RVec x = cone.sample_rational(rng);
    RVec d;
    if (k % 3 == 0) {
      const int f = static_cast<int>(rng() % cone.facet_normals().size());
      if (cone.facet_generator_indices(f).empty()) continue;
      d = cone.sample_boundary_rational(rng, f);
    } else {
      d = cone.sample_rational(rng);
    }
    if (is_zero(d)) continue;
    if (auto fail = check_pair(x, d)) return *fail;
    ++checked;
  }
  return make_pass(hyp, Verdict::pass_sampled,
                   std::to_string(checked) + " comparable pairs checked exactly");
}

HypothesisVerdict check_superadditive(const ConeMap& map, SuperadditiveScope scope, int budget,
                                      unsigned seed) {
  if (scope == SuperadditiveScope::on_space && !map.defined_on_space())
    throw std::invalid_argument("check_superadditive: map is defined only on the cone");
  const PolyhedralCone& cone = map.domain();

  // structural certificates
  std::function<std::optional<std::string>(const ConeMap&)> certify =
      [&](const ConeMap& m) -> std::optional<std::string> {
    if (m.linear_collapse()) return "linear (additive)";
    if (m.kind() == ConeMap::Kind::min_of_linear)
      return "componentwise min of linear forms (concave, 1-homogeneous)";
    if (m.kind() == ConeMap::Kind::scaled) {
      if (auto in = certify(m.inner())) return *in + ", scaled by a nonnegative factor";
    }
    return std::nullopt;
  };
  if (auto cert = certify(map))
    return make_pass(Hypothesis::superadditive, Verdict::pass_certified, *cert);

  std::mt19937_64 rng(seed);
  const int n = map.dim();
  auto sample_point = [&]() -> RVec {
    if (scope == SuperadditiveScope::on_cone) return cone.sample_rational(rng);
    RVec x(static_cast<std::size_t>(n));
    for (auto& c : x) c = random_small_rational(rng, /*allow_negative=*/true);
    return x;
  };
  auto violates = [&](const RVec& x, const RVec& y) {
    const RVec lhs = map.apply_exact(radd(x, y));
    const RVec rhs = radd(map.apply_exact(x), map.apply_exact(y));
    return !cone.contains_exact(rsub(lhs, rhs));
  };
  for (const RVec& gi : cone.generators())
    for (const RVec& gj : cone.generators())
      if (violates(gi, gj))
        return make_fail_pair(Hypothesis::superadditive, gi, gj,
                              "T(x+y) does not dominate T(x)+T(y)");
  for (int k = 0; k < budget; ++k) {
    const RVec x = sample_point();
    const RVec y = sample_point();
    try {
      if (violates(x, y))
        return make_fail_pair(Hypothesis::superadditive, x, y,
                              "T(x+y) does not dominate T(x)+T(y)");
    } catch (const std::invalid_argument&) {
      continue;  // cone-only map and the sampled sum left the domain
    }
  }
  return make_pass(Hypothesis::superadditive, Verdict::pass_sampled,
                   std::to_string(budget) + " exact pairs checked");
}

}  // namespace conespec
