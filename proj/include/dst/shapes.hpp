#pragma once

#include <optional>
#include <vector>

namespace dst {

/// Parameters of the variety Y_{n,(1^{n-1}),s}: n >= 2 and s >= n-1.
/// The ambient space has dimension N = n-1+s with basis e_1, ..., e_{n-1+s}.
struct GlobalParams {
  int n = 0;
  int s = 0;

  GlobalParams(int n_, int s_);

  int ambient_dim() const { return n - 1 + s; }
  /// Valid component indices i: 2..n when s = n-1, 1..n when s > n-1.
  int min_component_index() const { return s == n - 1 ? 2 : 1; }
  bool valid_component_index(int i) const {
    return i >= min_component_index() && i <= n;
  }
};

/// Two-column diagram for the nilpotent action (drawn with English rows,
/// top to bottom). The first column holds e_1..e_{n-1} bottom-to-top; the
/// second column holds e_n..e_{2n-2} bottom-to-top, continued upward by the
/// single-width cells e_{2n-1}..e_{n-1+s}. The operator x sends each second
/// column vector to its left neighbour (e_t -> e_{t-(n-1)} for n <= t <= 2n-2)
/// and everything else to 0.
///
/// The relative order of the single-width cells is a convention; ascending
/// bottom-to-top is the one under which the component words come out as
/// 3216/3261/3621 for (n,s) = (4,3) and 241 appears for (3,3) (see tests).
struct Diagram {
  int n, s;

  explicit Diagram(const GlobalParams& p) : n(p.n), s(p.s) {}

  int ambient_dim() const { return n - 1 + s; }
  bool first_column(int t) const { return t >= 1 && t <= n - 1; }
  bool doubled_right(int t) const { return t >= n && t <= 2 * n - 2; }
  bool single_cell(int t) const { return t >= 2 * n - 1 && t <= ambient_dim(); }
  /// Left neighbour of a doubled second-column cell.
  int left_of(int t) const { return t - (n - 1); }

  /// English row (1 = top) of the cell carrying e_t; the diagram has s rows.
  int row_of(int t) const;
  /// Column (1 or 2) of the cell carrying e_t.
  int col_of(int t) const { return first_column(t) ? 1 : 2; }
};

/// Sequence w of n distinct basis indices in {1,...,n-1+s}; the flag it
/// denotes is V_j = span{e_{w_1},...,e_{w_j}}.
using PartialPermutation = std::vector<int>;

/// Standard Young tableau of shape (2,1^{s-1})/(1^{s-n+1}) indexing an
/// irreducible component: the unique second-column cell carries i (the
/// "top-right" entry) and the first column carries the remaining labels
/// increasing downward.
struct ComponentTableau {
  int n, s;
  int top_right;

  ComponentTableau(const GlobalParams& p, int top_right_);

  /// w = [n-1, n-2, ..., n-i+1, n+s-1, n-i, ..., 1] for top-right entry i.
  PartialPermutation partial_permutation() const;

  /// Label of the cell carrying e_t, if any (labels are 1..n).
  std::optional<int> label_at(int t) const;
};

/// Row-increasing partial labeling of the diagram: all first-column cells plus
/// exactly one second-column cell carry the labels 1..n, and a doubled row
/// with both cells labeled increases left to right.
///
/// Stored as the partial permutation w (cell of label j is e_{w_j}).
class Filling {
 public:
  Filling(const GlobalParams& p, PartialPermutation w);

  int n() const { return n_; }
  int s() const { return s_; }
  const PartialPermutation& word() const { return w_; }

  /// Label at basis index t (1..n), or nullopt for an unlabeled cell.
  std::optional<int> label_at(int t) const;
  /// Basis index of the unique labeled second-column cell.
  int second_column_cell() const { return second_; }
  /// True when the labeled second-column cell sits in a doubled row.
  bool has_doubled_row() const;

  bool operator==(const Filling& rhs) const {
    return n_ == rhs.n_ && s_ == rhs.s_ && w_ == rhs.w_;
  }

 private:
  int n_, s_;
  PartialPermutation w_;
  int second_;  // basis index of the labeled second-column cell
};

/// All component tableaux for (n,s), ordered by descending top-right entry
/// (the order the straight-shape tableaux are conventionally listed in).
/// Count: n-1 when s = n-1, n when s > n-1.
std::vector<ComponentTableau> enumerate_components(const GlobalParams& params);

PartialPermutation tableau_to_partial_permutation(const ComponentTableau& t);

/// All fillings for (n,s), sorted lexicographically by their words.
std::vector<Filling> enumerate_fillings(const GlobalParams& params);

PartialPermutation filling_to_partial_permutation(const Filling& f);

/// Inverse of filling_to_partial_permutation; validates the word.
Filling filling_from_partial_permutation(const GlobalParams& params,
                                         const PartialPermutation& w);

/// True iff the filling's flag lies in the component K^i: either the doubled
/// row labels a < b satisfy a < i <= b, or the second-column label b sits in a
/// single-width cell and i <= b.
bool classify_filling(const Filling& f, int component_index);

}  // namespace dst
