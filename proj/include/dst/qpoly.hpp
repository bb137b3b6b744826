#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace dst {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order with no trailing zeros;
/// the empty coefficient list is the zero polynomial. All arithmetic is exact.
///
/// Poincare polynomials of the varieties handled here live naturally in the
/// variable sqrt(q); we store the q-form throughout, so the geometric
/// (cohomological) degree of a term is twice its polynomial degree.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static QPolynomial zero() { return QPolynomial{}; }
  static QPolynomial one() { return constant(1); }
  static QPolynomial constant(BigInt c);
  /// c * q^k
  static QPolynomial monomial(BigInt c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int d) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
  bool operator==(const QPolynomial& rhs) const = default;

  /// Exact evaluation at an integer point (Horner).
  BigInt eval(const BigInt& q0) const;

  /// Sum of coefficients, i.e. eval(1).
  BigInt coeff_sum() const;

  /// Human-readable form like "1 + 2q + q^2".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// q-integer [n]_q = 1 + q + ... + q^{n-1}. Requires n >= 1.
QPolynomial q_int(int n);

/// q-factorial [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1. Requires n >= 0.
QPolynomial q_factorial(int n);

/// Gaussian binomial [n choose k]_q, computed by the Pascal-type recurrence
/// [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q. Requires 0 <= k <= n.
QPolynomial q_binomial(int n, int k);

/// Exact evaluation of p at the integer q0.
BigInt eval_int(const QPolynomial& p, const BigInt& q0);

}  // namespace dst
