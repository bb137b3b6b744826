#include "dst/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dst {

GlobalParams::GlobalParams(int n_, int s_) : n(n_), s(s_) {
  if (n < 2) throw std::invalid_argument("GlobalParams: n must be at least 2");
  if (s < n - 1) {
    throw std::invalid_argument("GlobalParams: s must be at least n-1");
  }
}

int Diagram::row_of(int t) const {
  if (first_column(t)) return s - t + 1;
  if (doubled_right(t)) return s - left_of(t) + 1;
  if (single_cell(t)) return ambient_dim() - t + 1;
  throw std::invalid_argument("Diagram: basis index out of range");
}

ComponentTableau::ComponentTableau(const GlobalParams& p, int top_right_)
    : n(p.n), s(p.s), top_right(top_right_) {
  if (!p.valid_component_index(top_right)) {
    throw std::invalid_argument("ComponentTableau: invalid top-right entry " +
                                std::to_string(top_right));
  }
}

PartialPermutation ComponentTableau::partial_permutation() const {
  PartialPermutation w;
  w.reserve(static_cast<size_t>(n));
  for (int v = n - 1; v >= n - top_right + 1; --v) w.push_back(v);
  w.push_back(n + s - 1);
  for (int v = n - top_right; v >= 1; --v) w.push_back(v);
  return w;
}

std::optional<int> ComponentTableau::label_at(int t) const {
  PartialPermutation w = partial_permutation();
  for (size_t j = 0; j < w.size(); ++j) {
    if (w[j] == t) return static_cast<int>(j) + 1;
  }
  return std::nullopt;
}

Filling::Filling(const GlobalParams& p, PartialPermutation w)
    : n_(p.n), s_(p.s), w_(std::move(w)), second_(0) {
  Diagram d(p);
  if (static_cast<int>(w_.size()) != n_) {
    throw std::invalid_argument("Filling: word must have n entries");
  }
  std::vector<bool> seen(static_cast<size_t>(d.ambient_dim()) + 1, false);
  for (int t : w_) {
    if (t < 1 || t > d.ambient_dim()) {
      throw std::invalid_argument("Filling: basis index out of range");
    }
    if (seen[static_cast<size_t>(t)]) {
      throw std::invalid_argument("Filling: repeated basis index");
    }
    seen[static_cast<size_t>(t)] = true;
    if (d.col_of(t) == 2) {
      if (second_ != 0) {
        throw std::invalid_argument("Filling: more than one second-column label");
      }
      second_ = t;
    }
  }
  for (int t = 1; t <= n_ - 1; ++t) {
    if (!seen[static_cast<size_t>(t)]) {
      throw std::invalid_argument("Filling: first column not fully labeled");
    }
  }
  if (second_ == 0) {
    throw std::invalid_argument("Filling: no second-column label");
  }
  if (d.doubled_right(second_)) {
    // row-increase on the unique doubled row
    if (*label_at(d.left_of(second_)) > *label_at(second_)) {
      throw std::invalid_argument("Filling: doubled row must increase");
    }
  }
}

std::optional<int> Filling::label_at(int t) const {
  for (size_t j = 0; j < w_.size(); ++j) {
    if (w_[j] == t) return static_cast<int>(j) + 1;
  }
  return std::nullopt;
}

bool Filling::has_doubled_row() const { return second_ <= 2 * n_ - 2; }

std::vector<ComponentTableau> enumerate_components(const GlobalParams& params) {
  std::vector<ComponentTableau> out;
  for (int i = params.n; i >= params.min_component_index(); --i) {
    out.emplace_back(params, i);
  }
  return out;
}

PartialPermutation tableau_to_partial_permutation(const ComponentTableau& t) {
  return t.partial_permutation();
}

std::vector<Filling> enumerate_fillings(const GlobalParams& params) {
  Diagram d(params);
  const int n = params.n;
  if (n > 9) {
    throw std::invalid_argument("enumerate_fillings: n > 9 is too large to list");
  }
  std::vector<Filling> out;

  // Cells to label: the whole first column plus one second-column cell c2.
  for (int c2 = n; c2 <= d.ambient_dim(); ++c2) {
    std::vector<int> cells;
    for (int t = 1; t <= n - 1; ++t) cells.push_back(t);
    cells.push_back(c2);

    // labels[t] is the label put on cells[t]; run over all bijections
    std::vector<int> labels(static_cast<size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    do {
      if (d.doubled_right(c2)) {
        int label_left = labels[static_cast<size_t>(d.left_of(c2) - 1)];
        int label_right = labels[static_cast<size_t>(n - 1)];
        if (label_left > label_right) continue;
      }
      PartialPermutation w(static_cast<size_t>(n));
      for (size_t t = 0; t < static_cast<size_t>(n); ++t) {
        w[static_cast<size_t>(labels[t] - 1)] = cells[t];
      }
      out.emplace_back(params, std::move(w));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }

  std::sort(out.begin(), out.end(), [](const Filling& a, const Filling& b) {
    return a.word() < b.word();
  });
  return out;
}

PartialPermutation filling_to_partial_permutation(const Filling& f) {
  return f.word();
}

Filling filling_from_partial_permutation(const GlobalParams& params,
                                         const PartialPermutation& w) {
  return Filling(params, w);
}

bool classify_filling(const Filling& f, int component_index) {
  GlobalParams p(f.n(), f.s());
  if (!p.valid_component_index(component_index)) {
    throw std::invalid_argument("classify_filling: invalid component index");
  }
  Diagram d(p);
  int c2 = f.second_column_cell();
  int b = *f.label_at(c2);
  if (d.doubled_right(c2)) {
    int a = *f.label_at(d.left_of(c2));
    return a < component_index && component_index <= b;
  }
  return component_index <= b;
}

}  // namespace dst
