#include <vector>

#include "doctest.h"
#include "zsschur/coloring.hpp"
#include "zsschur/oracle.hpp"

using namespace zsschur;

namespace {

SchurParams params(int k, int r, int m, int ell, int eps, int v) {
  SchurParams p;
  p.k = k;
  p.r = r;
  p.m = m;
  p.ell = ell;
  p.eps = eps;
  p.v = v;
  return p;
}

Equation eq_of(int k, int r, int m, int ell, int eps, int v) {
  return build_equation(params(k, r, m, ell, eps, v));
}

// All m-colorings of [1, t], no reduction.
std::vector<Coloring> all_colorings(int t, int m) {
  std::vector<Coloring> out;
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(t), 0);
  while (true) {
    out.push_back(make_coloring(m, digits));
    int pos = t - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == m - 1)
      digits[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return out;
}

void check_witness(const Equation& eq, const Coloring& chi, int r,
                   const Witness& w) {
  CHECK(is_solution(eq, w));
  CHECK(color_sum(chi, w, r) == 0);
  for (int x : w.entries) {
    CHECK(x >= 1);
    CHECK(x <= chi.t);
  }
}

}  // namespace

TEST_CASE("block table reaches (0,0,0) and respects sum bounds") {
  const Coloring chi = make_coloring(2, {0, 1, 0});
  const BlockDPTable table(3, chi, 2);
  CHECK(table.reachable(0, 0, 0));
  CHECK(table.max_sum() == 9);
  CHECK(table.reachable(1, 2, 1));     // value 2 has color 1
  CHECK(table.reachable(3, 9, 0));     // 3+3+3, colors 0
  CHECK_FALSE(table.reachable(1, 4, 0));
  CHECK_FALSE(table.reachable(2, 7, 0));  // 3+4 impossible
  for (int used = 0; used <= 3; ++used)
    for (long long s = 0; s <= table.max_sum(); ++s)
      for (int c = 0; c < 2; ++c)
        if (table.reachable(used, s, c)) {
          CHECK(s <= static_cast<long long>(used) * chi.t);
          CHECK(s >= used);
        }
}

TEST_CASE("existence on the worked ell=k cases") {
  const Equation eq = eq_of(4, 2, 2, 4, 1, 0);

  SUBCASE("two-element coloring blocks the unique solution") {
    CHECK_FALSE(
        exists_zero_sum_solution(eq, make_coloring(2, {0, 1}), 2).has_value());
  }
  SUBCASE("three-element coloring admits") {
    const auto w = exists_zero_sum_solution(eq, make_coloring(2, {0, 1, 0}), 2);
    REQUIRE(w.has_value());
    check_witness(eq, make_coloring(2, {0, 1, 0}), 2, *w);
    // Least witness: x_4 = 2 forces the left block {2,3,3}.
    CHECK(w->entries == std::vector<int>{2, 3, 3, 2});
  }
}

TEST_CASE("existence on the balanced six-variable equation") {
  const Equation eq = eq_of(6, 2, 2, 1, 1, 1);
  const auto w = exists_zero_sum_solution(eq, make_coloring(2, {0}), 2);
  REQUIRE(w.has_value());
  CHECK(w->entries == std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("naive route agrees with the worked cases") {
  const Equation eq = eq_of(4, 2, 2, 4, 1, 0);
  CHECK_FALSE(naive_exists(eq, make_coloring(2, {0, 1}), 2).has_value());
  const auto w = naive_exists(eq, make_coloring(2, {0, 1, 0}), 2);
  REQUIRE(w.has_value());
  CHECK(w->entries == std::vector<int>{2, 3, 3, 2});
  CHECK_FALSE(naive_exists(eq, make_coloring(2, {0}), 2).has_value());

  const Equation balanced = eq_of(6, 2, 2, 1, 1, 1);
  CHECK(naive_exists(balanced, make_coloring(2, {0}), 2).has_value());
}

TEST_CASE("dp and naive agree on a small exhaustive slice") {
  // The full k <= 6 grid runs in the acceptance suite; this slice keeps the
  // unit tests quick while exercising every code path.
  for (int ell : {1, 2, 3, 4})
    for (int eps : {0, 1})
      for (int v = 0; v <= 1; ++v) {
        SchurParams p = params(4, 2, 2, ell, eps, v);
        try {
          p.validate();
        } catch (const InvalidParams&) {
          continue;
        }
        const Equation eq = build_equation(p);
        for (int t = 1; t <= 3; ++t)
          for (int m : {2, 3})
            for (const auto& chi : all_colorings(t, m)) {
              const auto dp = exists_zero_sum_solution(eq, chi, 2);
              const auto brute = naive_exists(eq, chi, 2);
              REQUIRE(dp.has_value() == brute.has_value());
              if (dp) {
                check_witness(eq, chi, 2, *dp);
                CHECK(dp->entries == brute->entries);  // both are least
              }
            }
      }
}

TEST_CASE("range infeasibility") {
  CHECK(range_infeasible(eq_of(12, 3, 3, 1, 0, 1), 2));  // 9 > 2*2+2
  CHECK(range_infeasible(eq_of(4, 2, 2, 4, 1, 0), 1));   // 3 < 4
  CHECK_FALSE(range_infeasible(eq_of(6, 2, 2, 1, 1, 1), 1));
  // Implies no coloring admits a solution.
  const Equation eq = eq_of(12, 3, 3, 1, 0, 1);
  for (const auto& chi : all_colorings(2, 3))
    CHECK_FALSE(exists_zero_sum_solution(eq, chi, 3).has_value());
}

TEST_CASE("every_coloring_admits reports the least counterexample") {
  const Equation eq = eq_of(4, 2, 2, 4, 1, 0);
  const auto blocked = every_coloring_admits(eq, 2, 2, 2);
  CHECK_FALSE(blocked.every_admits);
  REQUIRE(blocked.counterexample.has_value());
  CHECK(blocked.counterexample->colors == std::vector<std::uint8_t>{0, 1});

  const auto open = every_coloring_admits(eq, 3, 2, 2);
  CHECK(open.every_admits);
  CHECK_FALSE(open.counterexample.has_value());

  const auto balanced = every_coloring_admits(eq_of(6, 2, 2, 1, 1, 1), 1, 2, 2);
  CHECK(balanced.every_admits);
}

TEST_CASE("computed constants match the worked values") {
  SUBCASE("ell = k, r = 2") {
    const auto result = compute_schur_number(params(4, 2, 2, 4, 1, 0), 32);
    REQUIRE(result.value.has_value());
    CHECK(*result.value == 3);
    REQUIRE(result.certificate.has_value());
    CHECK(result.certificate->colors == std::vector<std::uint8_t>{0, 1});
  }
  SUBCASE("ell = k, k = 2r") {
    const auto result = compute_schur_number(params(6, 3, 2, 6, 1, 0), 32);
    REQUIRE(result.value.has_value());
    CHECK(*result.value == 4);
    REQUIRE(result.certificate.has_value());
    CHECK(result.certificate->t == 3);
  }
  SUBCASE("value one has no certificate") {
    const auto result = compute_schur_number(params(6, 2, 2, 1, 1, 1), 16);
    REQUIRE(result.value.has_value());
    CHECK(*result.value == 1);
    CHECK_FALSE(result.certificate.has_value());
  }
  SUBCASE("block family value derived independently") {
    const auto result = compute_schur_number(params(10, 2, 2, 1, 1, 1), 16);
    REQUIRE(result.value.has_value());
    CHECK(*result.value == 3);
  }
}

TEST_CASE("search can stop below the value") {
  const auto result = compute_schur_number(params(4, 2, 2, 4, 1, 0), 2);
  CHECK_FALSE(result.value.has_value());
  REQUIRE(result.certificate.has_value());
  CHECK(result.certificate->t == 2);
  CHECK(result.t_max == 2);
}

TEST_CASE("thread count does not change any reported result") {
  for (int threads : {1, 2, 5}) {
    SearchOptions opts;
    opts.threads = threads;
    const auto result = compute_schur_number(params(6, 3, 2, 6, 1, 0), 32, opts);
    REQUIRE(result.value.has_value());
    CHECK(*result.value == 4);
    REQUIRE(result.certificate.has_value());
    CHECK(result.certificate->colors == std::vector<std::uint8_t>{0, 1, 0});
  }
}

TEST_CASE("complement and translation invariance of existence") {
  SUBCASE("complement, two colors") {
    const Equation eq = eq_of(6, 3, 2, 6, 1, 0);
    for (const auto& chi : all_colorings(3, 2)) {
      Coloring flipped = chi;
      for (auto& c : flipped.colors) c = static_cast<std::uint8_t>(1 - c);
      CHECK(exists_zero_sum_solution(eq, chi, 3).has_value() ==
            exists_zero_sum_solution(eq, flipped, 3).has_value());
    }
  }
  SUBCASE("translation, m = r") {
    const Equation eq = eq_of(6, 3, 3, 1, 1, 0);
    for (const auto& chi : all_colorings(3, 3))
      for (int shift = 1; shift < 3; ++shift) {
        Coloring moved = chi;
        for (auto& c : moved.colors)
          c = static_cast<std::uint8_t>((c + shift) % 3);
        CHECK(exists_zero_sum_solution(eq, chi, 3).has_value() ==
              exists_zero_sum_solution(eq, moved, 3).has_value());
      }
  }
}

TEST_CASE("admitting is monotone in t on worked instances") {
  const Equation eq = eq_of(4, 2, 2, 4, 1, 0);
  bool admitted = false;
  for (int t = 1; t <= 6; ++t) {
    const bool now = every_coloring_admits(eq, t, 2, 2).every_admits;
    if (admitted) CHECK(now);
    admitted = now;
  }
  CHECK(admitted);
}

TEST_CASE("budget refusal and force") {
  const Equation eq = eq_of(4, 2, 2, 4, 1, 0);
  SearchOptions opts;
  opts.coloring_budget = 2;
  CHECK_THROWS_AS(every_coloring_admits(eq, 4, 2, 2, opts), BudgetExceeded);
  opts.force = true;
  CHECK_NOTHROW(every_coloring_admits(eq, 4, 2, 2, opts));

  CHECK_THROWS_AS(
      naive_exists(eq_of(12, 2, 2, 1, 1, 1), make_coloring(2, {0, 1, 0, 1}), 2,
                   10),
      BudgetExceeded);
}

TEST_CASE("default search cap") {
  CHECK(default_t_max(params(4, 2, 2, 4, 1, 0)) == 32);
  CHECK(default_t_max(params(6, 3, 3, 1, 1, 0)) == 72);
}
