#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dst/qpoly.hpp"
#include "dst/shapes.hpp"

namespace dst {

/// Intersection label K^{i,j} with i <= j in the context of (n,s); i = j
/// encodes the single irreducible component K^i, and i < j the intersection
/// K^i cap K^{i+1} cap ... cap K^j (consecutive indices are free: the
/// intersection of any K^{b_1},...,K^{b_m} only depends on min and max).
/// Range: 2 <= i <= j <= n when s = n-1, 1 <= i <= j <= n when s > n-1.
struct PairIndex {
  int n = 0, s = 0;
  int i = 0, j = 0;

  PairIndex(const GlobalParams& params, int i_, int j_);

  GlobalParams params() const { return GlobalParams(n, s); }
  bool operator==(const PairIndex& rhs) const = default;
};

/// One fiber of an iterated bundle.
struct Fiber {
  enum class Kind { Grassmannian, CompleteFlag, Projective };
  Kind kind;
  int a = 0;  // Gr(a,b), Fl(1^a), or P^a
  int b = 0;  // ambient dimension for Grassmannian fibers

  int dimension() const;
  QPolynomial poincare() const;
  /// Number of Schubert cells: C(b,a), a!, or a+1.
  BigInt cell_count() const;
  std::string to_string() const;
};

using BundleType = std::vector<Fiber>;

/// All valid pair indices for (n,s), ordered lexicographically.
std::vector<PairIndex> all_pairs(const GlobalParams& params);

/// K^{b_1} cap ... cap K^{b_m} = K^{min, max}. All inputs must share (n,s).
PairIndex intersect(const std::vector<PairIndex>& indices);

/// Complex dimension of K^{i,j}: C(n-1,2) + (s-1) - (j-i).
int dimension(const PairIndex& pair);

/// Iterated Grassmannian bundle type of K^{i,j}:
/// Gr(j-1,n-1), Fl(1^{j-1}), P^{s+i-n-1}, Fl(1^{n-j+1}).
BundleType bundle_type(const PairIndex& pair);

/// Poincare polynomial (in q, half cohomological degree) of K^{i,j}: the
/// product of the fiber Poincare polynomials. For s = n-1 this equals
/// [n-1]_q! [i-1]_q [n-j+1]_q.
QPolynomial poincare_pair(const PairIndex& pair);

/// Up-left closed set of cells above a Dyck path in the n x n grid. A cell
/// is addressed as (i,j) where i-1 counts columns from the left and j counts
/// rows from the bottom, so valid pair indices and cells strictly above the
/// diagonal coincide. arm(c) = i-2 cells strictly left, leg(c) = n-j cells
/// strictly above.
struct DyckCellSet {
  int n = 0;
  std::set<std::pair<int, int>> cells;

  static int arm(std::pair<int, int> c) { return c.first - 2; }
  int leg(std::pair<int, int> c) const { return n - c.second; }
  /// sum over cells of q^{arm+leg}
  QPolynomial inner_sum() const;
};

/// Cells weakly above and to the left of some input pair: the up-left closure
/// {(i',j') : exists (i,j) in pairs, i' <= i, j' >= j}. Requires s = n-1.
DyckCellSet dyck_from_pairs(const std::vector<PairIndex>& pairs);

/// Poincare polynomial of the union of the K^{i,j}:
/// [n-1]_q! * sum_{c in D} q^{arm(c)+leg(c)}. Requires s = n-1.
QPolynomial poincare_union(const std::vector<PairIndex>& pairs);

/// Independent inclusion-exclusion route to the same polynomial:
/// sum over nonempty subsets S of (-1)^{|S|+1} poincare_pair(intersect(S)).
/// At most 20 input pairs. Requires s = n-1.
QPolynomial poincare_union_oracle(const std::vector<PairIndex>& pairs);

/// Subvariety order: true iff K^a is contained in K^b, which holds exactly
/// when a.i <= b.i and b.j <= a.j (the interval [b.i,b.j] sits inside
/// [a.i,a.j]; more indices intersected means a smaller variety). Under
/// reverse inclusion this poset is the type A root lattice.
bool poset_leq(const PairIndex& a, const PairIndex& b);

}  // namespace dst
