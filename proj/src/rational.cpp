#include "conespec/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace conespec {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  // "p/q" and integer forms are handled by the bigint parser directly;
  // decimal forms ("1.25", "-3e-2") go through exact scaling by powers of ten.
  if (text.find_first_of(".eE") == std::string::npos) {
    try {
      return Rational(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
  }
  std::string t = text;
  long long exp10 = 0;
  if (auto pos = t.find_first_of("eE"); pos != std::string::npos) {
    exp10 = std::stoll(t.substr(pos + 1));
    t = t.substr(0, pos);
  }
  std::string digits;
  long long frac_digits = 0;
  bool seen_dot = false;
  for (char c : t) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed rational literal: " + text);
      seen_dot = true;
      continue;
    }
    digits += c;
    if (seen_dot) ++frac_digits;
  }
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("malformed rational literal: " + text);
  Rational value;
  try {
    value = Rational(boost::multiprecision::cpp_int(digits));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  long long net = exp10 - frac_digits;
  boost::multiprecision::cpp_int pow10 = 1;
  for (long long i = 0; i < std::abs(net); ++i) pow10 *= 10;
  if (net >= 0)
    value *= Rational(pow10);
  else
    value /= Rational(pow10);
  return value;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

RVec rvec_of(const Eigen::VectorXd& x) {
  RVec out(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = Rational(x[i]);
  return out;
}

Eigen::VectorXd to_eigen(const RVec& x) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[static_cast<Eigen::Index>(i)] = to_double(x[i]);
  return out;
}

Eigen::MatrixXd to_eigen(const RMat& m) {
  if (m.empty()) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(m[i][j]);
  return out;
}

Rational rdot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rdot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec radd(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("radd: dimension mismatch");
  RVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RVec rsub(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rsub: dimension mismatch");
  RVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RVec rscale(const Rational& c, const RVec& a) {
  RVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

RVec rneg(const RVec& a) { return rscale(Rational(-1), a); }

RVec rmatvec(const RMat& m, const RVec& x) {
  RVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = rdot(m[i], x);
  return out;
}

RMat rmatmul(const RMat& a, const RMat& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), p = b[0].size();
  RMat out(n, RVec(p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("rmatmul: dimension mismatch");
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
  }
  return out;
}

RMat rmat_scale(const Rational& c, const RMat& m) {
  RMat out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = rscale(c, m[i]);
  return out;
}

RMat rmat_identity(int n) {
  RMat out(static_cast<std::size_t>(n), RVec(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return out;
}

bool is_zero(const RVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; });
}

bool operator_eq(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

RVec canonical_ray(const RVec& a) {
  for (const Rational& v : a) {
    if (v != 0) {
      Rational c = v < 0 ? -v : v;
      return rscale(Rational(1) / c, a);
    }
  }
  return a;
}

bool same_ray(const RVec& a, const RVec& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  std::size_t pivot = 0;
  while (pivot < a.size() && a[pivot] == 0) ++pivot;
  if (b[pivot] == 0) return false;
  Rational c = a[pivot] / b[pivot];
  if (c <= 0) return false;
  return operator_eq(a, rscale(c, b));
}

namespace {

// In-place fraction-free-ish Gaussian elimination; returns pivot columns.
std::vector<int> eliminate(RMat& m, int dim) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < dim && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][static_cast<std::size_t>(col)] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = Rational(1) / m[row][static_cast<std::size_t>(col)];
    for (int j = 0; j < dim; ++j) m[row][static_cast<std::size_t>(j)] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row) continue;
      const Rational f = m[r][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < dim; ++j)
        m[r][static_cast<std::size_t>(j)] -= f * m[row][static_cast<std::size_t>(j)];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rational_rank(const RMat& rows) {
  if (rows.empty()) return 0;
  RMat m = rows;
  return static_cast<int>(eliminate(m, static_cast<int>(rows[0].size())).size());
}

RMat rational_nullspace(const RMat& rows, int dim) {
  RMat m = rows;
  std::vector<int> pivots = m.empty() ? std::vector<int>{} : eliminate(m, dim);
  std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  RMat basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RVec v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace conespec
