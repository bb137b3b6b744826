#include "dst/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dst/exact_rank.hpp"

namespace dst {

void MultivariatePolynomial::add_term(const Monomial& m, const BigInt& c) {
  if (static_cast<int>(m.size()) != num_vars_) {
    throw std::invalid_argument("add_term: wrong exponent vector length");
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int MultivariatePolynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = std::accumulate(terms_.begin()->first.begin(),
                          terms_.begin()->first.end(), 0);
  for (const auto& [m, c] : terms_) {
    if (std::accumulate(m.begin(), m.end(), 0) != d) {
      throw std::logic_error("polynomial is not homogeneous");
    }
  }
  return d;
}

MultivariatePolynomial MultivariatePolynomial::multiplied_by(
    const Monomial& m) const {
  MultivariatePolynomial out(num_vars_);
  for (const auto& [mono, c] : terms_) {
    Monomial shifted = mono;
    for (size_t t = 0; t < shifted.size(); ++t) shifted[t] += m[t];
    out.add_term(shifted, c);
  }
  return out;
}

MultivariatePolynomial elementary_symmetric(int d, const std::vector<int>& vars,
                                            int n) {
  if (d < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
  MultivariatePolynomial out(n);
  if (d > static_cast<int>(vars.size())) return out;
  if (d == 0) {
    out.add_term(MultivariatePolynomial::Monomial(static_cast<size_t>(n), 0), 1);
    return out;
  }
  // iterate over d-subsets of vars by index combination
  std::vector<int> idx(static_cast<size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    MultivariatePolynomial::Monomial m(static_cast<size_t>(n), 0);
    for (int t : idx) m[static_cast<size_t>(vars[static_cast<size_t>(t)] - 1)] = 1;
    out.add_term(m, 1);
    int pos = d - 1;
    while (pos >= 0 &&
           idx[static_cast<size_t>(pos)] ==
               static_cast<int>(vars.size()) - d + pos) {
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int t = pos + 1; t < d; ++t) {
      idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
    }
  }
  return out;
}

MultivariatePolynomial complete_homogeneous(int d, const std::vector<int>& vars,
                                            int n) {
  if (d < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
  MultivariatePolynomial out(n);
  if (d == 0) {
    out.add_term(MultivariatePolynomial::Monomial(static_cast<size_t>(n), 0), 1);
    return out;
  }
  if (vars.empty()) return out;
  // multisets of size d: weakly increasing index sequences
  std::vector<int> pick(static_cast<size_t>(d), 0);
  while (true) {
    MultivariatePolynomial::Monomial m(static_cast<size_t>(n), 0);
    for (int t : pick) ++m[static_cast<size_t>(vars[static_cast<size_t>(t)] - 1)];
    out.add_term(m, 1);
    int pos = d - 1;
    while (pos >= 0 &&
           pick[static_cast<size_t>(pos)] == static_cast<int>(vars.size()) - 1) {
      --pos;
    }
    if (pos < 0) break;
    int v = pick[static_cast<size_t>(pos)] + 1;
    for (int t = pos; t < d; ++t) pick[static_cast<size_t>(t)] = v;
  }
  return out;
}

IdealSpec build_ideal(int n, int i) {
  if (n < 2 || i < 2 || i > n) {
    throw std::invalid_argument("build_ideal: need 2 <= i <= n");
  }
  IdealSpec spec;
  spec.n = n;
  spec.i = i;
  int top = (n - 1) * (n - 2) / 2 + n - 2;
  spec.truncation = top + 1;

  std::vector<int> all_vars(static_cast<size_t>(n));
  std::iota(all_vars.begin(), all_vars.end(), 1);
  std::vector<int> head(all_vars.begin(), all_vars.begin() + (i - 1));
  std::vector<int> tail(all_vars.begin() + (i - 1), all_vars.end());

  for (int d = 2; d <= n; ++d) {
    spec.generators.push_back(elementary_symmetric(d, all_vars, n));
  }
  for (int d = n + 1 - i; d <= spec.truncation; ++d) {
    spec.generators.push_back(complete_homogeneous(d, head, n));
  }
  for (int d = i - 1; d <= spec.truncation; ++d) {
    spec.generators.push_back(complete_homogeneous(d, tail, n));
  }
  return spec;
}

namespace {

/// Monomials of the given total degree in lex order, plus index lookup.
struct DegreeBasis {
  std::vector<MultivariatePolynomial::Monomial> monomials;
  std::map<MultivariatePolynomial::Monomial, int> index;

  DegreeBasis(int n, int degree) {
    MultivariatePolynomial::Monomial m(static_cast<size_t>(n), 0);
    emit(m, 0, degree, n);
    for (size_t t = 0; t < monomials.size(); ++t) {
      index.emplace(monomials[t], static_cast<int>(t));
    }
  }

  void emit(MultivariatePolynomial::Monomial& m, int var, int rest, int n) {
    if (var == n - 1) {
      m[static_cast<size_t>(var)] = rest;
      monomials.push_back(m);
      m[static_cast<size_t>(var)] = 0;
      return;
    }
    for (int e = rest; e >= 0; --e) {
      m[static_cast<size_t>(var)] = e;
      emit(m, var + 1, rest - e, n);
      m[static_cast<size_t>(var)] = 0;
    }
  }
};

SparseRow to_row(const MultivariatePolynomial& poly, const DegreeBasis& basis) {
  SparseRow row;
  row.reserve(poly.terms().size());
  for (const auto& [m, c] : poly.terms()) {
    row.emplace_back(basis.index.at(m), c);
  }
  std::sort(row.begin(), row.end());
  return row;
}

}  // namespace

HilbertVector hilbert_series(const IdealSpec& spec) {
  const int n = spec.n;
  const int cap = spec.truncation;

  std::vector<std::vector<const MultivariatePolynomial*>> gens_by_degree(
      static_cast<size_t>(cap) + 1);
  for (const auto& g : spec.generators) {
    int d = g.homogeneous_degree();
    if (d <= 0) {
      throw std::invalid_argument("hilbert_series: generators must be homogeneous of positive degree");
    }
    if (d <= cap) gens_by_degree[static_cast<size_t>(d)].push_back(&g);
  }

  HilbertVector dims;
  dims.push_back(1);  // no degree-0 generators

  DegreeBasis prev_basis(n, 0);
  std::vector<SparseRow> prev_echelon;  // echelon rows of I_{d-1}

  for (int d = 1; d <= cap; ++d) {
    DegreeBasis basis(n, d);

    // column transition: multiply a degree-(d-1) monomial by x_k
    std::vector<std::vector<int>> shift(
        prev_basis.monomials.size(), std::vector<int>(static_cast<size_t>(n)));
    for (size_t mi = 0; mi < prev_basis.monomials.size(); ++mi) {
      auto m = prev_basis.monomials[mi];
      for (int k = 0; k < n; ++k) {
        ++m[static_cast<size_t>(k)];
        shift[mi][static_cast<size_t>(k)] = basis.index.at(m);
        --m[static_cast<size_t>(k)];
      }
    }

    std::vector<SparseRow> candidates;
    candidates.reserve(prev_echelon.size() * static_cast<size_t>(n) +
                       gens_by_degree[static_cast<size_t>(d)].size());
    for (const auto& row : prev_echelon) {
      for (int k = 0; k < n; ++k) {
        SparseRow shifted;
        shifted.reserve(row.size());
        for (const auto& [col, c] : row) {
          shifted.emplace_back(shift[static_cast<size_t>(col)][static_cast<size_t>(k)], c);
        }
        std::sort(shifted.begin(), shifted.end());
        candidates.push_back(std::move(shifted));
      }
    }
    for (const auto* g : gens_by_degree[static_cast<size_t>(d)]) {
      candidates.push_back(to_row(*g, basis));
    }

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const SparseRow& a, const SparseRow& b) {
                       return a.size() < b.size();
                     });
    ExactEchelon ech;
    for (auto& row : candidates) ech.insert(std::move(row));

    dims.push_back(static_cast<long long>(basis.monomials.size()) - ech.rank());

    prev_echelon.clear();
    prev_echelon.reserve(ech.pivot_rows().size());
    for (const auto& [lead, row] : ech.pivot_rows()) prev_echelon.push_back(row);
    prev_basis = std::move(basis);
  }
  return dims;
}

BigInt osp_count(int n, int i) {
  if (n < 2 || i < 2 || i > n) {
    throw std::invalid_argument("osp_count: need 2 <= i <= n");
  }
  if (n > 8) throw std::invalid_argument("osp_count: n too large to enumerate");

  const int blocks = n - 1;
  std::vector<int> assign(static_cast<size_t>(n), 0);
  BigInt count = 0;
  while (true) {
    // ordered set partition <=> surjective assignment onto block positions
    std::vector<int> seen(static_cast<size_t>(blocks), 0);
    for (int t : assign) ++seen[static_cast<size_t>(t)];
    bool ok = std::all_of(seen.begin(), seen.end(), [](int c) { return c > 0; });
    // 1..i-1 in distinct blocks, i..n in distinct blocks
    for (int a = 1; a <= n && ok; ++a) {
      for (int b = a + 1; b <= n && ok; ++b) {
        if (assign[static_cast<size_t>(a - 1)] != assign[static_cast<size_t>(b - 1)]) continue;
        bool both_low = b < i;
        bool both_high = a >= i;
        if (both_low || both_high) ok = false;
      }
    }
    if (ok) ++count;

    size_t pos = 0;
    while (pos < assign.size() && ++assign[pos] == blocks) assign[pos++] = 0;
    if (pos == assign.size()) break;
  }
  return count;
}

}  // namespace dst
