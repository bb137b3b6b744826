#pragma once

#include <map>
#include <vector>

#include "dst/qpoly.hpp"

namespace dst {

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients; zero coefficients are never stored.
class MultivariatePolynomial {
 public:
  /// Exponent vector, one entry per ambient variable.
  using Monomial = std::vector<int>;

  explicit MultivariatePolynomial(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  void add_term(const Monomial& m, const BigInt& c);

  /// Degree when homogeneous (all stored generators are); -1 for zero.
  int homogeneous_degree() const;

  /// Product with the monomial m (exponentwise shift of every term).
  MultivariatePolynomial multiplied_by(const Monomial& m) const;

 private:
  int num_vars_;
  std::map<Monomial, BigInt> terms_;
};

/// e_d over the chosen variables (1-based indices into x_1..x_n): the sum of
/// all squarefree degree-d monomials. e_0 = 1; d > |vars| gives 0.
MultivariatePolynomial elementary_symmetric(int d, const std::vector<int>& vars,
                                            int n);

/// h_d over the chosen variables: the sum of all degree-d monomials.
/// h_0 = 1; positive d over an empty variable set gives 0.
MultivariatePolynomial complete_homogeneous(int d, const std::vector<int>& vars,
                                            int n);

/// Generators of the ideal presenting H*(K^i) in Z[x_1,...,x_n] (s = n-1):
///   e_d(x_1,...,x_n)        for 2 <= d <= n,
///   h_d(x_1,...,x_{i-1})    for d >= n+1-i,
///   h_d(x_i,...,x_n)        for d >= i-1,
/// truncated at degree D = C(n-1,2) + n - 2 + 1, one past the top nonzero
/// degree of the quotient, so the vanishing there is witnessed. Higher
/// h-generators cannot touch degrees <= D and are discarded.
struct IdealSpec {
  int n = 0;
  int i = 0;
  int truncation = 0;  // D
  std::vector<MultivariatePolynomial> generators;
};

IdealSpec build_ideal(int n, int i);

/// Graded dimensions dim_0, ..., dim_D of Z[x]/I as Q-vector spaces.
using HilbertVector = std::vector<long long>;

/// Hilbert function of the quotient by exact linear algebra: in each degree d,
/// dim_d = #monomials - rank of the span of the generator multiples. The
/// degree-d slice of the ideal is accumulated incrementally as
/// x_1 I_{d-1} + ... + x_n I_{d-1} + (degree-d generators), which spans the
/// same space as all monomial multiples; ranks are exact over Q.
HilbertVector hilbert_series(const IdealSpec& spec);

/// Number of ordered set partitions of {1,...,n} into n-1 blocks with
/// 1,...,i-1 in distinct blocks and i,...,n in distinct blocks, by direct
/// enumeration. Equals (i-1)(n-i+1)(n-1)!.
BigInt osp_count(int n, int i);

}  // namespace dst
