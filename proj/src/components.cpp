#include "dst/components.hpp"

#include <algorithm>
#include <stdexcept>

namespace dst {

namespace {

int choose2(int m) { return m * (m - 1) / 2; }

BigInt factorial_int(int m) {
  BigInt out = 1;
  for (int t = 2; t <= m; ++t) out *= t;
  return out;
}

BigInt binomial_int(int m, int k) {
  if (k < 0 || k > m) return 0;
  BigInt out = 1;
  for (int t = 0; t < k; ++t) {
    out *= m - t;
    out /= t + 1;
  }
  return out;
}

void require_same_context(const std::vector<PairIndex>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("empty list of pair indices");
  for (const auto& p : pairs) {
    if (p.n != pairs.front().n || p.s != pairs.front().s) {
      throw std::invalid_argument("pair indices with mixed (n,s) context");
    }
  }
}

void require_square_case(const std::vector<PairIndex>& pairs) {
  require_same_context(pairs);
  if (pairs.front().s != pairs.front().n - 1) {
    throw std::invalid_argument("operation is only defined for s = n-1");
  }
}

}  // namespace

PairIndex::PairIndex(const GlobalParams& params, int i_, int j_)
    : n(params.n), s(params.s), i(i_), j(j_) {
  if (i < params.min_component_index() || i > j || j > n) {
    throw std::invalid_argument("pair index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") out of range for n=" +
                                std::to_string(n) + ", s=" + std::to_string(s));
  }
}

int Fiber::dimension() const {
  switch (kind) {
    case Kind::Grassmannian: return a * (b - a);
    case Kind::CompleteFlag: return choose2(a);
    case Kind::Projective: return a;
  }
  return 0;
}

QPolynomial Fiber::poincare() const {
  switch (kind) {
    case Kind::Grassmannian: return q_binomial(b, a);
    case Kind::CompleteFlag: return q_factorial(a);
    case Kind::Projective: return q_int(a + 1);
  }
  return QPolynomial::one();
}

BigInt Fiber::cell_count() const {
  switch (kind) {
    case Kind::Grassmannian: return binomial_int(b, a);
    case Kind::CompleteFlag: return factorial_int(a);
    case Kind::Projective: return a + 1;
  }
  return 1;
}

std::string Fiber::to_string() const {
  switch (kind) {
    case Kind::Grassmannian:
      return "Gr(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::CompleteFlag: return "Fl(1^" + std::to_string(a) + ")";
    case Kind::Projective: return "P^" + std::to_string(a);
  }
  return "?";
}

std::vector<PairIndex> all_pairs(const GlobalParams& params) {
  std::vector<PairIndex> out;
  for (int i = params.min_component_index(); i <= params.n; ++i) {
    for (int j = i; j <= params.n; ++j) out.emplace_back(params, i, j);
  }
  return out;
}

PairIndex intersect(const std::vector<PairIndex>& indices) {
  require_same_context(indices);
  int lo = indices.front().i;
  int hi = indices.front().j;
  for (const auto& p : indices) {
    lo = std::min(lo, p.i);
    hi = std::max(hi, p.j);
  }
  return PairIndex(indices.front().params(), lo, hi);
}

int dimension(const PairIndex& pair) {
  return choose2(pair.n - 1) + (pair.s - 1) - (pair.j - pair.i);
}

BundleType bundle_type(const PairIndex& pair) {
  return {
      Fiber{Fiber::Kind::Grassmannian, pair.j - 1, pair.n - 1},
      Fiber{Fiber::Kind::CompleteFlag, pair.j - 1, 0},
      Fiber{Fiber::Kind::Projective, pair.s + pair.i - pair.n - 1, 0},
      Fiber{Fiber::Kind::CompleteFlag, pair.n - pair.j + 1, 0},
  };
}

QPolynomial poincare_pair(const PairIndex& pair) {
  QPolynomial out = QPolynomial::one();
  for (const Fiber& f : bundle_type(pair)) out = out * f.poincare();
  return out;
}

QPolynomial DyckCellSet::inner_sum() const {
  QPolynomial out;
  for (const auto& c : cells) {
    out += QPolynomial::monomial(1, arm(c) + leg(c));
  }
  return out;
}

DyckCellSet dyck_from_pairs(const std::vector<PairIndex>& pairs) {
  require_square_case(pairs);
  DyckCellSet d;
  d.n = pairs.front().n;
  for (const auto& p : pairs) {
    for (int i = 2; i <= p.i; ++i) {
      for (int j = p.j; j <= d.n; ++j) d.cells.emplace(i, j);
    }
  }
  return d;
}

QPolynomial poincare_union(const std::vector<PairIndex>& pairs) {
  require_square_case(pairs);
  return q_factorial(pairs.front().n - 1) * dyck_from_pairs(pairs).inner_sum();
}

QPolynomial poincare_union_oracle(const std::vector<PairIndex>& pairs) {
  require_square_case(pairs);
  if (pairs.size() > 20) {
    throw std::invalid_argument("poincare_union_oracle: more than 20 pairs");
  }
  QPolynomial out;
  const size_t subsets = size_t{1} << pairs.size();
  for (size_t mask = 1; mask < subsets; ++mask) {
    std::vector<PairIndex> chosen;
    for (size_t t = 0; t < pairs.size(); ++t) {
      if (mask & (size_t{1} << t)) chosen.push_back(pairs[t]);
    }
    QPolynomial term = poincare_pair(intersect(chosen));
    if (__builtin_popcountll(mask) % 2 == 1) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

bool poset_leq(const PairIndex& a, const PairIndex& b) {
  if (a.n != b.n || a.s != b.s) {
    throw std::invalid_argument("poset_leq: mixed (n,s) context");
  }
  return a.i <= b.i && b.j <= a.j;
}

}  // namespace dst
