#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <string>
#include <vector>

namespace conespec {

/// Exact rational scalar used on every certificate-grade code path.
/// Doubles convert losslessly (they are dyadic rationals).
using Rational = boost::multiprecision::cpp_rational;

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;  // rows

// -- construction / conversion ----------------------------------------------

Rational parse_rational(const std::string& text);  // "p/q", "p", or decimal
std::string to_string(const Rational& r);

inline Rational rational_of(double x) { return Rational(x); }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

RVec rvec_of(const Eigen::VectorXd& x);
Eigen::VectorXd to_eigen(const RVec& x);
Eigen::MatrixXd to_eigen(const RMat& m);

// -- exact vector/matrix arithmetic ------------------------------------------

Rational rdot(const RVec& a, const RVec& b);
RVec radd(const RVec& a, const RVec& b);
RVec rsub(const RVec& a, const RVec& b);
RVec rscale(const Rational& c, const RVec& a);
RVec rneg(const RVec& a);
RVec rmatvec(const RMat& m, const RVec& x);
RMat rmatmul(const RMat& a, const RMat& b);
RMat rmat_scale(const Rational& c, const RMat& m);
RMat rmat_identity(int n);

bool is_zero(const RVec& a);
bool operator_eq(const RVec& a, const RVec& b);

/// true when a == c*b for some c > 0 (same ray).
bool same_ray(const RVec& a, const RVec& b);

/// Scales so the first nonzero entry is +1 or -1; the zero vector is returned as is.
RVec canonical_ray(const RVec& a);

// -- exact linear algebra -----------------------------------------------------

int rational_rank(const RMat& rows);

/// Basis of {x : row·x = 0 for every row}; rows may be empty (full space).
RMat rational_nullspace(const RMat& rows, int dim);

}  // namespace conespec
