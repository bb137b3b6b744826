// Acceptance suite: each criterion prints a single PASS/FAIL line and the
// process exits nonzero when any of them fails. Runtime bounds are part of
// the criteria and are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "dst/cli.hpp"
#include "dst/cohomology.hpp"
#include "dst/components.hpp"
#include "dst/nilpotent.hpp"
#include "dst/qpoly.hpp"
#include "dst/shapes.hpp"

using dst::BigInt;
using dst::GlobalParams;
using dst::PairIndex;
using dst::QPolynomial;
using nlohmann::json;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (exception: ") + e.what() + ")";
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  bool in_budget = elapsed < budget_seconds;
  bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs of %gs budget)%s%s\n",
              pass ? "PASS" : "FAIL", number, label.c_str(), elapsed,
              budget_seconds, ok ? "" : " [values]",
              in_budget ? "" : " [overtime]");
  if (!note.empty()) std::printf("       %s\n", note.c_str());
}

bool criterion1_worked_example() {
  dst::cli::CommandRequest req;
  req.verb = dst::cli::Verb::Union;
  req.n = 5;
  req.pairs = {{2, 3}, {4, 4}};
  dst::cli::CommandResult res = dst::cli::run(req);
  if (res.exit_code != 0) return false;
  json out = json::parse(res.output);
  std::vector<std::string> expect = {"1",  "5",  "14", "26", "35",
                                     "36", "28", "16", "6",  "1"};
  return out["poincare"].get<std::vector<std::string>>() == expect &&
         out["innerSum"].get<std::vector<std::string>>() ==
             std::vector<std::string>{"1", "2", "3", "1"};
}

bool criterion2_union_oracles() {
  for (int n = 3; n <= 6; ++n) {
    GlobalParams params(n, n - 1);
    auto pairs = dst::all_pairs(params);
    const size_t m = pairs.size();
    for (size_t a = 0; a < m; ++a) {
      std::vector<PairIndex> one = {pairs[a]};
      if (dst::poincare_union(one) != dst::poincare_union_oracle(one)) {
        return false;
      }
      for (size_t b = a + 1; b < m; ++b) {
        std::vector<PairIndex> two = {pairs[a], pairs[b]};
        if (dst::poincare_union(two) != dst::poincare_union_oracle(two)) {
          return false;
        }
        for (size_t c = b + 1; c < m; ++c) {
          std::vector<PairIndex> three = {pairs[a], pairs[b], pairs[c]};
          if (dst::poincare_union(three) != dst::poincare_union_oracle(three)) {
            return false;
          }
        }
      }
    }
    std::mt19937 rng(1000u + static_cast<unsigned>(n));
    for (int round = 0; round < 200; ++round) {
      std::vector<PairIndex> sub = pairs;
      std::shuffle(sub.begin(), sub.end(), rng);
      sub.erase(sub.begin() + static_cast<long>(1 + rng() % std::min<size_t>(6, sub.size())), sub.end());
      if (dst::poincare_union(sub) != dst::poincare_union_oracle(sub)) {
        return false;
      }
    }
  }
  return true;
}

bool criterion3_cohomology() {
  for (int n = 2; n <= 5; ++n) {
    GlobalParams params(n, n - 1);
    for (int i = 2; i <= n; ++i) {
      dst::IdealSpec spec = dst::build_ideal(n, i);
      dst::HilbertVector dims = dst::hilbert_series(spec);
      QPolynomial predicted = dst::q_factorial(n - 1) * dst::q_int(i - 1) *
                              dst::q_int(n - i + 1);
      int top = spec.truncation - 1;
      if (static_cast<int>(dims.size()) != spec.truncation + 1) return false;
      for (int d = 0; d <= spec.truncation; ++d) {
        if (BigInt(dims[static_cast<size_t>(d)]) != predicted.coeff(d)) {
          return false;
        }
      }
      for (int d = 0; d <= top; ++d) {
        if (dims[static_cast<size_t>(d)] != dims[static_cast<size_t>(top - d)]) {
          return false;
        }
      }
      if (dims[static_cast<size_t>(spec.truncation)] != 0) return false;
      BigInt total = std::accumulate(
          dims.begin(), dims.end(), BigInt(0),
          [](BigInt acc, long long v) { return acc + v; });
      BigInt formula = BigInt(i - 1) * (n - i + 1);
      for (int t = 2; t <= n - 1; ++t) formula *= t;
      if (total != dst::osp_count(n, i) || total != formula) return false;
    }
  }
  return true;
}

bool criterion4_point_counts() {
  struct Case {
    int n, p;
  };
  for (Case c : {Case{3, 2}, Case{3, 3}, Case{4, 2}}) {
    GlobalParams params(c.n, c.n - 1);
    dst::NilpotentModel model(params);
    for (const auto& pair : dst::all_pairs(params)) {
      if (dst::count_points_fp(pair, model, c.p) !=
          dst::eval_int(dst::poincare_pair(pair), c.p)) {
        return false;
      }
    }
  }
  GlobalParams p43(4, 3);
  return dst::count_points_fp(PairIndex(p43, 3, 3),
                              dst::NilpotentModel(p43), 2) == 189;
}

bool criterion5_classification() {
  for (int n = 2; n <= 6; ++n) {
    for (int s = n - 1; s <= n + 2; ++s) {
      GlobalParams params(n, s);
      dst::NilpotentModel model(params);
      auto fillings = dst::enumerate_fillings(params);
      for (int i = params.min_component_index(); i <= n; ++i) {
        PairIndex diag(params, i, i);
        for (const auto& f : fillings) {
          if (dst::classify_filling(f, i) !=
              dst::flag_membership(dst::IndexFlag{f.word()}, diag, model)) {
            return false;
          }
        }
      }
    }
  }
  GlobalParams p43(4, 3);
  int fig2 = 0;
  for (const auto& f : dst::enumerate_fillings(p43)) {
    fig2 += dst::classify_filling(f, 3) ? 1 : 0;
  }
  GlobalParams p33(3, 3);
  int fig3 = 0;
  for (const auto& f : dst::enumerate_fillings(p33)) {
    fig3 += dst::classify_filling(f, 2) ? 1 : 0;
  }
  return fig2 == 24 && fig3 == 8;
}

bool criterion6_words() {
  GlobalParams p43(4, 3);
  std::vector<dst::PartialPermutation> words;
  for (const auto& t : dst::enumerate_components(p43)) {
    words.push_back(dst::tableau_to_partial_permutation(t));
  }
  if (words != std::vector<dst::PartialPermutation>{
                   {3, 2, 1, 6}, {3, 2, 6, 1}, {3, 6, 2, 1}}) {
    return false;
  }

  auto has_word = [](const GlobalParams& params,
                     const dst::PartialPermutation& w) {
    for (const auto& f : dst::enumerate_fillings(params)) {
      if (dst::filling_to_partial_permutation(f) == w) return true;
    }
    return false;
  };
  return has_word(p43, {3, 2, 1, 4}) && has_word(p43, {3, 1, 2, 4}) &&
         has_word(GlobalParams(3, 3), {2, 4, 1});
}

bool criterion7_structural() {
  for (int n = 2; n <= 8; ++n) {
    GlobalParams params(n, n - 1);
    for (const auto& pair : dst::all_pairs(params)) {
      if (dst::dyck_from_pairs({pair}).inner_sum() !=
          dst::q_int(pair.i - 1) * dst::q_int(n - pair.j + 1)) {
        return false;
      }
      if (dst::poincare_pair(pair).degree() != dst::dimension(pair)) {
        return false;
      }
    }
    // the degree identity also holds for s > n-1
    for (int s = n; s <= n + 2; ++s) {
      for (const auto& pair : dst::all_pairs(GlobalParams(n, s))) {
        if (dst::poincare_pair(pair).degree() != dst::dimension(pair)) {
          return false;
        }
      }
    }
  }

  // Gaussian binomials vs partitions inside a k x (n-k) box
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      int rows = k, width = n - k;
      std::vector<BigInt> counts(static_cast<size_t>(rows * width) + 1, 0);
      std::vector<int> parts(static_cast<size_t>(rows), 0);
      while (true) {
        bool valid = true;
        for (size_t r = 1; r < parts.size(); ++r) {
          if (parts[r] > parts[r - 1]) valid = false;
        }
        if (valid) {
          int weight = std::accumulate(parts.begin(), parts.end(), 0);
          counts[static_cast<size_t>(weight)] += 1;
        }
        size_t pos = 0;
        while (pos < parts.size() && ++parts[pos] > width) parts[pos++] = 0;
        if (pos == parts.size()) break;
      }
      if (dst::q_binomial(n, k) != QPolynomial(std::move(counts))) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "worked example: union --n 5 --pairs 2,3 4,4", 0.1,
            criterion1_worked_example);
  criterion(2, "union formula vs inclusion-exclusion, n=3..6", 30.0,
            criterion2_union_oracles);
  criterion(3, "cohomology presentation Hilbert functions, n<=5", 120.0,
            criterion3_cohomology);
  criterion(4, "finite-field point counts, n=3 (p=2,3) and n=4 (p=2)", 10.0,
            criterion4_point_counts);
  criterion(5, "filling classification vs flag membership, n<=6", 5.0,
            criterion5_classification);
  criterion(6, "tableau and filling words 3216/3261/3621, 3214/3124, 241", 5.0,
            criterion6_words);
  criterion(7, "rectangle identity, degree=dimension, Gaussian binomials", 5.0,
            criterion7_structural);

  if (failures == 0) {
    std::printf("acceptance: all 7 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
