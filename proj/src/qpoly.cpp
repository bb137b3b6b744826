#include "dst/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dst {

QPolynomial QPolynomial::constant(BigInt c) {
  if (c == 0) return QPolynomial{};
  std::vector<BigInt> v;
  v.push_back(std::move(c));
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::monomial(BigInt c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (c == 0) return QPolynomial{};
  std::vector<BigInt> v(static_cast<size_t>(degree) + 1);
  v.back() = std::move(c);
  return QPolynomial(std::move(v));
}

BigInt QPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(d)];
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] -= rhs.coeffs_[d];
  normalize();
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return QPolynomial{};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t a = 0; a < lhs.coeffs_.size(); ++a) {
    if (lhs.coeffs_[a] == 0) continue;
    for (size_t b = 0; b < rhs.coeffs_.size(); ++b) {
      out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
    }
  }
  return QPolynomial(std::move(out));
}

BigInt QPolynomial::eval(const BigInt& q0) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q0 + *it;
  }
  return acc;
}

BigInt QPolynomial::coeff_sum() const { return eval(1); }

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] == 0) continue;
    BigInt a = coeffs_[d];
    if (!out.empty()) {
      out += a > 0 ? " + " : " - ";
      if (a < 0) a = -a;
    }
    if (d == 0) {
      out += a.str();
    } else {
      if (a == -1) {
        out += "-";
      } else if (a != 1) {
        out += a.str();
      }
      out += "q";
      if (d >= 2) out += "^" + std::to_string(d);
    }
  }
  return out;
}

QPolynomial q_int(int n) {
  if (n < 1) throw std::invalid_argument("q_int: n must be positive");
  return QPolynomial(std::vector<BigInt>(static_cast<size_t>(n), 1));
}

QPolynomial q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  QPolynomial acc = QPolynomial::one();
  for (int t = 1; t <= n; ++t) acc = acc * q_int(t);
  return acc;
}

QPolynomial q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("q_binomial: need 0 <= k <= n");
  }
  // row[j] = [m choose j]_q while sweeping m = 0..n
  std::vector<QPolynomial> row(static_cast<size_t>(k) + 1);
  row[0] = QPolynomial::one();
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      QPolynomial up = j <= m - 1 ? row[static_cast<size_t>(j)] : QPolynomial::zero();
      row[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j - 1)] + QPolynomial::monomial(1, j) * up;
    }
  }
  return row[static_cast<size_t>(k)];
}

BigInt eval_int(const QPolynomial& p, const BigInt& q0) { return p.eval(q0); }

}  // namespace dst
