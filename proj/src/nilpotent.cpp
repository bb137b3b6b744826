#include "dst/nilpotent.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace dst {

namespace {

void require_pair_matches_model(const PairIndex& pair, const NilpotentModel& model) {
  if (pair.n != model.n || pair.s != model.s) {
    throw std::invalid_argument("pair index context does not match the model");
  }
}

}  // namespace

bool flag_membership(const IndexFlag& flag, const PairIndex& pair,
                     const NilpotentModel& model) {
  require_pair_matches_model(pair, model);
  const auto& w = flag.w;
  if (static_cast<int>(w.size()) != model.n) {
    throw std::invalid_argument("flag_membership: word must have n entries");
  }

  // V_{j-1} <= im(x): the first j-1 indices land in {1,...,n-1}.
  for (int m = 0; m < pair.j - 1; ++m) {
    if (w[static_cast<size_t>(m)] > model.n - 1) return false;
  }
  // im(x) <= V_n: every index 1..n-1 appears in w.
  std::vector<bool> present(static_cast<size_t>(model.ambient_dim()) + 1, false);
  for (int t : w) present[static_cast<size_t>(t)] = true;
  for (int t = 1; t <= model.n - 1; ++t) {
    if (!present[static_cast<size_t>(t)]) return false;
  }
  // x V_n <= V_{i-1}: the image index of every non-killed basis vector of V_n
  // appears among the first i-1 entries.
  for (int t : w) {
    int xt = model.apply_x(t);
    if (xt == 0) continue;
    bool in_prefix = false;
    for (int m = 0; m < pair.i - 1; ++m) {
      if (w[static_cast<size_t>(m)] == xt) in_prefix = true;
    }
    if (!in_prefix) return false;
  }
  return true;
}

namespace {

using FpVec = std::vector<uint8_t>;

void add_scaled(FpVec& dst, const FpVec& src, int c, int p) {
  if (c == 0) return;
  for (size_t t = 0; t < dst.size(); ++t) {
    dst[t] = static_cast<uint8_t>((dst[t] + c * src[t]) % p);
  }
}

/// Row-echelon basis over F_p with unit leading entries, rows ordered by
/// pivot column. Canonical representative of a subspace for our purposes.
struct FpEchelon {
  int p = 2;
  int dim = 0;
  std::vector<FpVec> rows;
  std::vector<int> pivots;

  FpEchelon(int p_, int dim_) : p(p_), dim(dim_) {}

  int rank() const { return static_cast<int>(rows.size()); }

  void reduce(FpVec& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      int c = v[static_cast<size_t>(pivots[r])];
      if (c != 0) add_scaled(v, rows[r], p - c, p);
    }
  }

  bool contains(FpVec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
  }

  /// Reduce and insert; returns false when v was already in the span.
  bool insert(FpVec v) {
    reduce(v);
    int lead = -1;
    for (int t = 0; t < dim; ++t) {
      if (v[static_cast<size_t>(t)] != 0) {
        lead = t;
        break;
      }
    }
    if (lead < 0) return false;
    // normalize leading entry to 1 (p <= 3: the inverse is p-1 or 1)
    int a = v[static_cast<size_t>(lead)];
    if (a != 1) {
      int inv = 1;
      while (a * inv % p != 1) ++inv;
      for (auto& x : v) x = static_cast<uint8_t>(x * inv % p);
    }
    auto pos = std::upper_bound(pivots.begin(), pivots.end(), lead);
    size_t idx = static_cast<size_t>(pos - pivots.begin());
    pivots.insert(pos, lead);
    rows.insert(rows.begin() + static_cast<long>(idx), std::move(v));
    return true;
  }
};

FpVec basis_vector(int dim, int t) {
  FpVec v(static_cast<size_t>(dim), 0);
  v[static_cast<size_t>(t - 1)] = 1;
  return v;
}

/// {v : x v in W} as an echelon basis, computed as the kernel of the map
/// v -> reduce_W(x v).
FpEchelon x_preimage(const FpEchelon& w_space, const NilpotentModel& model, int p) {
  int dim = model.ambient_dim();
  // matrix[r][t] = r-th coordinate of reduce_W(x e_{t+1})
  std::vector<FpVec> matrix(static_cast<size_t>(dim),
                            FpVec(static_cast<size_t>(dim), 0));
  for (int t = 1; t <= dim; ++t) {
    int xt = model.apply_x(t);
    if (xt == 0) continue;
    FpVec col = basis_vector(dim, xt);
    w_space.reduce(col);
    for (int r = 0; r < dim; ++r) {
      matrix[static_cast<size_t>(r)][static_cast<size_t>(t - 1)] = col[static_cast<size_t>(r)];
    }
  }

  // RREF of the matrix, then read off the kernel from the free columns.
  std::vector<int> pivot_row_of_col(static_cast<size_t>(dim), -1);
  int rank = 0;
  for (int c = 0; c < dim && rank < dim; ++c) {
    int sel = -1;
    for (int r = rank; r < dim; ++r) {
      if (matrix[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(matrix[static_cast<size_t>(sel)], matrix[static_cast<size_t>(rank)]);
    int a = matrix[static_cast<size_t>(rank)][static_cast<size_t>(c)];
    if (a != 1) {
      int inv = 1;
      while (a * inv % p != 1) ++inv;
      for (auto& x : matrix[static_cast<size_t>(rank)]) {
        x = static_cast<uint8_t>(x * inv % p);
      }
    }
    for (int r = 0; r < dim; ++r) {
      if (r == rank) continue;
      int f = matrix[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (f != 0) add_scaled(matrix[static_cast<size_t>(r)], matrix[static_cast<size_t>(rank)], p - f, p);
    }
    pivot_row_of_col[static_cast<size_t>(c)] = rank;
    ++rank;
  }

  FpEchelon kernel(p, dim);
  for (int f = 0; f < dim; ++f) {
    if (pivot_row_of_col[static_cast<size_t>(f)] >= 0) continue;
    FpVec v(static_cast<size_t>(dim), 0);
    v[static_cast<size_t>(f)] = 1;
    for (int c = 0; c < dim; ++c) {
      int r = pivot_row_of_col[static_cast<size_t>(c)];
      if (r < 0) continue;
      int entry = matrix[static_cast<size_t>(r)][static_cast<size_t>(f)];
      if (entry != 0) v[static_cast<size_t>(c)] = static_cast<uint8_t>((p - entry) % p);
    }
    kernel.insert(std::move(v));
  }
  return kernel;
}

/// Canonical representatives of the lines of S/V: with Q an echelon basis of
/// S reduced mod V, the combinations q_{t0} + sum_{t>t0} c_t q_t hit every
/// subspace V + line exactly once.
std::vector<FpVec> new_line_candidates(const FpEchelon& space,
                                       const FpEchelon& flag, int p,
                                       std::int64_t& budget_left) {
  FpEchelon quotient(p, flag.dim);
  for (const auto& row : space.rows) {
    FpVec v = row;
    flag.reduce(v);
    quotient.insert(std::move(v));
  }
  const auto& q = quotient.rows;
  std::vector<FpVec> out;
  for (size_t t0 = 0; t0 < q.size(); ++t0) {
    size_t free_count = q.size() - t0 - 1;
    std::vector<int> c(free_count, 0);
    while (true) {
      FpVec v = q[t0];
      for (size_t t = 0; t < free_count; ++t) add_scaled(v, q[t0 + 1 + t], c[t], p);
      if (--budget_left < 0) {
        throw BudgetExceeded("count_points_fp: enumeration budget exceeded");
      }
      out.push_back(std::move(v));
      size_t pos = 0;
      while (pos < free_count && ++c[pos] == p) c[pos++] = 0;
      if (pos == free_count) break;
    }
  }
  return out;
}

struct CountContext {
  const NilpotentModel& model;
  int p;
  int i, j;
  FpEchelon image;  // im(x) = span{e_1,...,e_{n-1}}
};

/// Extend the chain by V_m, V_{m+1}, ..., V_n; `flag` holds V_{m-1}.
/// `preimage` is x^{-1}V_{i-1}, available once V_{i-1} is fixed.
BigInt extend_chain(const CountContext& ctx, const FpEchelon& flag, int m,
                    const FpEchelon* preimage, std::int64_t& budget_left) {
  const int n = ctx.model.n;
  FpEchelon computed(ctx.p, 0);
  if (m == ctx.i) {
    computed = x_preimage(flag, ctx.model, ctx.p);
    preimage = &computed;
  }
  const FpEchelon& space = m <= ctx.j - 1 ? ctx.image : *preimage;

  BigInt total = 0;
  for (auto& v : new_line_candidates(space, flag, ctx.p, budget_left)) {
    FpEchelon next = flag;
    next.insert(std::move(v));
    if (m == n) {
      bool ok = true;
      for (int t = 1; t <= n - 1 && ok; ++t) {
        ok = next.contains(basis_vector(next.dim, t));
      }
      if (ok) total += 1;
    } else {
      total += extend_chain(ctx, next, m + 1, preimage, budget_left);
    }
  }
  return total;
}

}  // namespace

BigInt count_points_fp(const PairIndex& pair, const NilpotentModel& model,
                       int p, const PointCountOptions& opts) {
  require_pair_matches_model(pair, model);
  if (p != 2 && p != 3) {
    throw std::invalid_argument("count_points_fp: only p in {2,3} is supported");
  }
  if (opts.budget <= 0) {
    throw std::invalid_argument("count_points_fp: budget must be positive");
  }

  const int dim = model.ambient_dim();
  CountContext ctx{model, p, pair.i, pair.j, FpEchelon(p, dim)};
  for (int t = 1; t <= model.n - 1; ++t) {
    ctx.image.insert(basis_vector(dim, t));
  }

  int threads = std::max(1, opts.threads);
  FpEchelon empty(p, dim);

  // With i = 1 the constraint space x^{-1}V_0 = ker(x) is already known.
  FpEchelon kernel(p, dim);
  const FpEchelon* preimage = nullptr;
  if (pair.i == 1) {
    kernel = x_preimage(empty, model, p);
    preimage = &kernel;
  }

  std::int64_t top_budget = opts.budget;
  const FpEchelon& first_space = 1 <= pair.j - 1 ? ctx.image : *preimage;
  std::vector<FpVec> first = new_line_candidates(first_space, empty, p, top_budget);

  if (threads <= 1 || first.size() < 2) {
    std::int64_t budget_left = top_budget;
    BigInt total = 0;
    for (auto& v : first) {
      FpEchelon next = empty;
      next.insert(std::move(v));
      total += extend_chain(ctx, next, 2, preimage, budget_left);
    }
    return total;
  }

  threads = std::min<int>(threads, static_cast<int>(first.size()));
  std::vector<BigInt> partial(static_cast<size_t>(threads), 0);
  std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  std::int64_t slice_budget = top_budget / threads;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      try {
        std::int64_t budget_left = slice_budget;
        BigInt acc = 0;
        for (size_t idx = static_cast<size_t>(w); idx < first.size();
             idx += static_cast<size_t>(threads)) {
          FpEchelon next = empty;
          next.insert(first[idx]);
          acc += extend_chain(ctx, next, 2, preimage, budget_left);
        }
        partial[static_cast<size_t>(w)] = std::move(acc);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  BigInt total = 0;
  for (auto& x : partial) total += x;
  return total;
}

}  // namespace dst
