#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dst/components.hpp"
#include "dst/qpoly.hpp"
#include "dst/shapes.hpp"

namespace dst {

/// Raised when the point-count enumeration exceeds its candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// The fixed nilpotent operator on C^{n-1+s} (or F_p^{n-1+s}):
///   x e_t = e_{t-(n-1)}  for n <= t <= 2n-2,   x e_t = 0 otherwise.
/// Its Jordan type is (2^{n-1}, 1^{s-n+1}); im(x) = span{e_1,...,e_{n-1}} and
/// x^2 = 0.
struct NilpotentModel {
  int n, s;

  explicit NilpotentModel(const GlobalParams& p) : n(p.n), s(p.s) {}

  int ambient_dim() const { return n - 1 + s; }

  /// Image basis index of x e_t, or 0 when x kills e_t.
  int apply_x(int basis_index) const {
    if (basis_index < 1 || basis_index > ambient_dim()) {
      throw std::invalid_argument("apply_x: basis index out of range");
    }
    if (basis_index >= n && basis_index <= 2 * n - 2) {
      return basis_index - (n - 1);
    }
    return 0;
  }
};

/// Coordinate flag V_m = span{e_{w_1},...,e_{w_m}} built from a partial
/// permutation.
struct IndexFlag {
  PartialPermutation w;
};

/// Membership of a permutation flag in K^{i,j}, i.e. the containments
///   V_{j-1} <= im(x),  im(x) <= V_n,  x V_n <= V_{i-1},
/// each checked as an index-set computation.
bool flag_membership(const IndexFlag& flag, const PairIndex& pair,
                     const NilpotentModel& model);

struct PointCountOptions {
  /// Cap on enumerated candidate lines; exceeding it throws BudgetExceeded.
  std::int64_t budget = 100000000;
  /// Worker threads; the top-level line choices are partitioned and partial
  /// counts combined by exact addition.
  int threads = 1;
};

/// Number of chains V_1 < ... < V_n in F_p^{n-1+s} with dim V_m = m satisfying
/// V_{j-1} <= im(x) <= V_n <= x^{-1} V_{i-1}. Lines are enumerated in
/// quotients, with each step restricted to the exact constraint subspace so
/// impossible prefixes are pruned early.
///
/// For a variety with an affine paving the point count over F_p equals its
/// Poincare polynomial (in the q-form) evaluated at q = p; the identity is
/// exercised empirically by the test suite rather than assumed anywhere else.
BigInt count_points_fp(const PairIndex& pair, const NilpotentModel& model,
                       int p, const PointCountOptions& opts = {});

}  // namespace dst
