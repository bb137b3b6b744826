#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dst/components.hpp"
#include "dst/nilpotent.hpp"
#include "dst/qpoly.hpp"
#include "dst/shapes.hpp"

using dst::GlobalParams;
using dst::IndexFlag;
using dst::NilpotentModel;
using dst::PairIndex;

TEST_CASE("apply_x matches the arrow diagram") {
  GlobalParams p(4, 3);
  NilpotentModel model(p);
  CHECK(model.apply_x(4) == 1);
  CHECK(model.apply_x(5) == 2);
  CHECK(model.apply_x(6) == 3);
  CHECK(model.apply_x(2) == 0);
  CHECK(model.apply_x(1) == 0);
  CHECK_THROWS_AS(model.apply_x(7), std::invalid_argument);
  CHECK_THROWS_AS(model.apply_x(0), std::invalid_argument);

  // skew case: single-width cells are killed
  GlobalParams skew(3, 4);
  NilpotentModel m2(skew);
  CHECK(m2.apply_x(3) == 1);
  CHECK(m2.apply_x(4) == 2);
  CHECK(m2.apply_x(5) == 0);
  CHECK(m2.apply_x(6) == 0);
}

TEST_CASE("x is square-zero of Jordan type (2^{n-1},1^{s-n+1})") {
  for (int n = 2; n <= 6; ++n) {
    for (int s = n - 1; s <= n + 2; ++s) {
      NilpotentModel model{GlobalParams(n, s)};
      int doubled = 0, singles = 0;
      for (int t = 1; t <= model.ambient_dim(); ++t) {
        int xt = model.apply_x(t);
        if (xt != 0) {
          CHECK(model.apply_x(xt) == 0);  // x^2 = 0
          ++doubled;
        } else if (t >= n) {
          ++singles;
        }
      }
      CHECK(doubled == n - 1);
      CHECK(singles == s - n + 1);
    }
  }
}

TEST_CASE("flag membership on known words") {
  GlobalParams p(4, 3);
  NilpotentModel model(p);
  auto member = [&](std::vector<int> w, int i, int j) {
    return dst::flag_membership(IndexFlag{w}, PairIndex(p, i, j), model);
  };

  // 3216 has doubled row labels (1,4); it lies in K^2, K^3 and K^4.
  CHECK(member({3, 2, 1, 6}, 2, 2));
  CHECK(member({3, 2, 1, 6}, 3, 3));
  CHECK(member({3, 2, 1, 6}, 4, 4));
  CHECK(member({3, 2, 1, 6}, 2, 4));

  // 3214 has doubled row labels (3,4): in K^4 only.
  CHECK_FALSE(member({3, 2, 1, 4}, 3, 3));
  CHECK(member({3, 2, 1, 4}, 4, 4));
  CHECK_FALSE(member({3, 2, 1, 4}, 2, 2));

  // 3124 has doubled row labels (2,4): fails i=2 but holds for i in {3,4}.
  CHECK_FALSE(member({3, 1, 2, 4}, 2, 2));
  CHECK(member({3, 1, 2, 4}, 3, 3));
  CHECK(member({3, 1, 2, 4}, 3, 4));
}

TEST_CASE("membership agrees with classification everywhere") {
  for (int n = 2; n <= 6; ++n) {
    for (int s = n - 1; s <= n + 2; ++s) {
      GlobalParams p(n, s);
      NilpotentModel model(p);
      auto fillings = dst::enumerate_fillings(p);
      for (int i = p.min_component_index(); i <= n; ++i) {
        PairIndex diag(p, i, i);
        for (const auto& f : fillings) {
          CHECK(dst::classify_filling(f, i) ==
                dst::flag_membership(IndexFlag{f.word()}, diag, model));
        }
      }
    }
  }
}

TEST_CASE("pair membership equals simultaneous component membership") {
  for (int n = 2; n <= 5; ++n) {
    for (int s = n - 1; s <= n + 1; ++s) {
      GlobalParams p(n, s);
      NilpotentModel model(p);
      auto fillings = dst::enumerate_fillings(p);
      for (const auto& pair : dst::all_pairs(p)) {
        for (const auto& f : fillings) {
          bool simultaneous = true;
          for (int i = pair.i; i <= pair.j; ++i) {
            simultaneous = simultaneous && dst::classify_filling(f, i);
          }
          CHECK(dst::flag_membership(IndexFlag{f.word()}, pair, model) ==
                simultaneous);
        }
      }
    }
  }
}

TEST_CASE("point counts match Poincare evaluations (frozen examples)") {
  GlobalParams p43(4, 3);
  NilpotentModel m43(p43);
  CHECK(dst::count_points_fp(PairIndex(p43, 3, 3), m43, 2) == 189);

  GlobalParams p32(3, 2);
  NilpotentModel m32(p32);
  CHECK(dst::count_points_fp(PairIndex(p32, 2, 2), m32, 2) == 9);
  CHECK(dst::count_points_fp(PairIndex(p32, 2, 3), m32, 2) == 3);
}

TEST_CASE("point counts match Poincare evaluations (sweeps)") {
  struct Case {
    int n, p;
  };
  for (Case c : {Case{3, 2}, Case{4, 2}, Case{3, 3}}) {
    GlobalParams params(c.n, c.n - 1);
    NilpotentModel model(params);
    for (const auto& pair : dst::all_pairs(params)) {
      CHECK(dst::count_points_fp(pair, model, c.p) ==
            dst::eval_int(dst::poincare_pair(pair), c.p));
    }
  }
  // a skew case, where i = 1 is allowed
  GlobalParams skew(3, 3);
  NilpotentModel model(skew);
  for (const auto& pair : dst::all_pairs(skew)) {
    CHECK(dst::count_points_fp(pair, model, 2) ==
          dst::eval_int(dst::poincare_pair(pair), 2));
  }
}

TEST_CASE("deepest intersection has the smallest count") {
  for (int n : {3, 4}) {
    GlobalParams params(n, n - 1);
    NilpotentModel model(params);
    dst::BigInt deepest =
        dst::count_points_fp(PairIndex(params, 2, n), model, 2);
    for (const auto& pair : dst::all_pairs(params)) {
      CHECK(deepest <= dst::count_points_fp(pair, model, 2));
    }
  }
}

TEST_CASE("threaded point count is exact and deterministic") {
  GlobalParams p(4, 3);
  NilpotentModel model(p);
  dst::PointCountOptions opts;
  opts.threads = 4;
  for (const auto& pair : dst::all_pairs(p)) {
    CHECK(dst::count_points_fp(pair, model, 2, opts) ==
          dst::count_points_fp(pair, model, 2));
  }
}

TEST_CASE("budget enforcement") {
  GlobalParams p(4, 3);
  NilpotentModel model(p);
  dst::PointCountOptions opts;
  opts.budget = 100;
  CHECK_THROWS_AS(dst::count_points_fp(PairIndex(p, 2, 2), model, 2, opts),
                  dst::BudgetExceeded);
}

TEST_CASE("parameter validation") {
  GlobalParams p(4, 3);
  NilpotentModel model(p);
  CHECK_THROWS_AS(dst::count_points_fp(PairIndex(p, 2, 2), model, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(PairIndex(p, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(PairIndex(p, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(PairIndex(p, 2, 5), std::invalid_argument);
  // i = 1 is valid once s > n-1
  GlobalParams skew(4, 4);
  CHECK(PairIndex(skew, 1, 2).i == 1);
}
