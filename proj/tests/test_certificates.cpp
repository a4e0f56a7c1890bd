#include <algorithm>
#include <map>

#include "doctest.h"
#include "zsschur/certificates.hpp"
#include "zsschur/formulas.hpp"
#include "zsschur/oracle.hpp"

using namespace zsschur;

namespace {

bool has_source(const TupleSet& set, const std::string& source) {
  return std::any_of(set.tuples.begin(), set.tuples.end(),
                     [&](const ProofTuple& t) { return t.source == source; });
}

const ProofTuple& by_source(const TupleSet& set, const std::string& source) {
  for (const auto& t : set.tuples)
    if (t.source == source) return t;
  throw std::out_of_range(source);
}

// Checks the universal zero-sum property by brute force: the color sum
// vanishes mod r under every assignment of colors to the distinct values.
void check_universal_zero_sum(const ProofTuple& tuple) {
  std::map<int, int> mult;
  for (int x : tuple.witness.entries) ++mult[x];
  const int r = tuple.params.r;
  std::vector<int> counts;
  for (auto [value, count] : mult) counts.push_back(count);
  std::vector<int> assignment(counts.size(), 0);
  while (true) {
    long long sum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
      sum += static_cast<long long>(counts[i]) * assignment[i];
    CHECK(sum % r == 0);
    std::size_t pos = 0;
    while (pos < assignment.size() && assignment[pos] == r - 1)
      assignment[pos++] = 0;
    if (pos == assignment.size()) break;
    ++assignment[pos];
  }
}

}  // namespace

TEST_CASE("certificates for the ell = k family") {
  const Certificate c42 = cert_thm_k(4, 2);
  REQUIRE(c42.coloring.has_value());
  CHECK(c42.coloring->colors == std::vector<std::uint8_t>{0, 1});
  CHECK(verify_certificate(c42));

  const Certificate c63 = cert_thm_k(6, 3);
  CHECK(c63.coloring->colors == std::vector<std::uint8_t>{0, 1, 0});
  CHECK(verify_certificate(c63));

  const Certificate c93 = cert_thm_k(9, 3);
  CHECK(c93.coloring->colors == std::vector<std::uint8_t>{0, 1});
  CHECK(verify_certificate(c93));

  CHECK_THROWS_AS(cert_thm_k(2, 2), HypothesisError);
}

TEST_CASE("certificates for the exact block value") {
  SUBCASE("value one needs no coloring") {
    const Certificate c = cert_thm_general(6);
    CHECK_FALSE(c.coloring.has_value());
    CHECK(verify_certificate(c));
  }
  SUBCASE("empty-range cases") {
    const Certificate c8 = cert_thm_general(8);
    REQUIRE(c8.coloring.has_value());
    CHECK(c8.coloring->t == 1);
    CHECK(verify_certificate(c8));
    const Certificate c10 = cert_thm_general(10);
    CHECK(c10.coloring->t == 2);
    CHECK(range_infeasible(build_equation(c10.params), 2));
    CHECK(verify_certificate(c10));
  }
  SUBCASE("ad hoc colorings") {
    CHECK(cert_thm_general(12).coloring->colors ==
          std::vector<std::uint8_t>{0, 0, 1});
    CHECK(cert_thm_general(14).coloring->colors ==
          std::vector<std::uint8_t>{0, 0, 1, 1});
    CHECK(verify_certificate(cert_thm_general(12)));
    CHECK(verify_certificate(cert_thm_general(14)));
  }
  SUBCASE("block colorings from k = 16 on") {
    const Certificate c16 = cert_thm_general(16);
    CHECK(c16.coloring->colors == std::vector<std::uint8_t>{0, 0, 1, 1});
    CHECK(verify_certificate(c16));
    const Certificate c26 = cert_thm_general(26);
    CHECK(c26.coloring->t == 8);
    CHECK(std::count(c26.coloring->colors.begin(), c26.coloring->colors.end(),
                     0) == 4);
    CHECK(verify_certificate(c26));
  }
  CHECK_THROWS_AS(cert_thm_general(7), HypothesisError);
}

TEST_CASE("certificates for the general block family") {
  const Certificate c = cert_thm_more(12, 3, 1);
  REQUIRE(c.coloring.has_value());
  CHECK(c.coloring->t == 2);
  CHECK(c.coloring->colors == std::vector<std::uint8_t>{0, 0});
  CHECK(range_infeasible(build_equation(c.params), 2));
  CHECK(verify_certificate(c));

  const Certificate c2 = cert_thm_more(12, 2, 2);
  CHECK(c2.coloring->t == 1);
  CHECK(range_infeasible(build_equation(c2.params), 1));
  CHECK(verify_certificate(c2));

  CHECK_THROWS_AS(cert_thm_more(8, 2, 2), HypothesisError);
}

TEST_CASE("failing certificate is detected") {
  Certificate bogus;
  bogus.params = params_for_source("thm-k", 4, 2, 0);
  bogus.coloring = make_coloring(2, {0, 0, 0});
  bogus.source = "test/all-zero";
  CHECK_FALSE(verify_certificate(bogus));
}

TEST_CASE("universal witness for the general block family") {
  SUBCASE("interior instance") {
    const ProofTuple w = witness_thm_more(12, 3, 1);
    CHECK(w.witness.entries ==
          std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3});
    CHECK(w.zero_sum_claimed);
    check_universal_zero_sum(w);
  }
  SUBCASE("two distinct block values") {
    const ProofTuple w = witness_thm_more(12, 2, 2);
    CHECK(w.witness.entries ==
          std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2});
    check_universal_zero_sum(w);
  }
  SUBCASE("balanced instance is all ones") {
    const ProofTuple w = witness_thm_more(8, 2, 2);
    CHECK(w.witness.entries == std::vector<int>(8, 1));
    CHECK(w.zero_sum_claimed);
  }
  SUBCASE("large instance") {
    const ProofTuple w = witness_thm_more(24, 3, 1);
    CHECK(is_solution(build_equation(w.params), w.witness));
    CHECK(w.zero_sum_claimed);
    check_universal_zero_sum(w);
  }
}

TEST_CASE("proof tuples for the ell = k family") {
  const auto set = proof_tuples("thm-k", params_for_source("thm-k", 4, 2, 0));
  CHECK(has_source(set, "thm-k/ones-then-two"));
  CHECK(by_source(set, "thm-k/ones-then-two").witness.entries ==
        std::vector<int>{1, 1, 2, 1});
  CHECK(by_source(set, "thm-k/threes-then-twos").witness.entries ==
        std::vector<int>{3, 3, 2, 2});
  // k = 4 is too small for the even-multiple zero-sum construction.
  CHECK_FALSE(set.skipped.empty());

  const auto big = proof_tuples("thm-k", params_for_source("thm-k", 12, 3, 0));
  CHECK(has_source(big, "thm-k/even-multiple-zero-sum"));
  const auto odd = proof_tuples("thm-k", params_for_source("thm-k", 9, 3, 0));
  CHECK(has_source(odd, "thm-k/odd-multiple-zero-sum"));
}

TEST_CASE("proof tuples for the ell = 2 upper bound") {
  const auto set = proof_tuples("thm-2", params_for_source("thm-2", 8, 2, 0));
  CHECK(by_source(set, "thm-2/ones-two-half").witness.entries ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 2, 4});
  CHECK(has_source(set, "thm-2/ones-half-cap"));

  // The cap row is a solution only when 4 | k.
  const auto ten = proof_tuples("thm-2", params_for_source("thm-2", 10, 2, 0));
  CHECK_FALSE(has_source(ten, "thm-2/ones-half-cap"));
  CHECK(std::any_of(ten.skipped.begin(), ten.skipped.end(),
                    [](const std::string& s) {
                      return s.find("ones-half-cap") != std::string::npos;
                    }));
}

TEST_CASE("proof tuple for the block upper bound is universal") {
  const auto set =
      proof_tuples("thm-v-upper", params_for_source("thm-v-upper", 10, 2, 2));
  REQUIRE(set.tuples.size() == 1);
  CHECK(set.tuples[0].witness.entries == std::vector<int>(10, 1));
  CHECK(set.tuples[0].zero_sum_claimed);
  check_universal_zero_sum(set.tuples[0]);

  const auto wide =
      proof_tuples("thm-v-upper", params_for_source("thm-v-upper", 14, 2, 1));
  CHECK(wide.tuples[0].witness.entries ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5, 5, 5, 5});
}

TEST_CASE("proof tuples for the exact block value") {
  for (int k = 6; k <= 26; k += 2) {
    const auto set = proof_tuples("thm-general",
                                  params_for_source("thm-general", k, 2, 1));
    CHECK_FALSE(set.tuples.empty());
    const Equation eq = build_equation(params_for_source("thm-general", k, 2, 1));
    for (const auto& tuple : set.tuples) CHECK(is_solution(eq, tuple.witness));
  }
  const auto twelve =
      proof_tuples("thm-general", params_for_source("thm-general", 12, 2, 1));
  CHECK(by_source(twelve, "thm-general/k12-only-solution").witness.entries ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3});
}

TEST_CASE("proof tuples reject unknown tags") {
  CHECK_THROWS_AS(proof_tuples("thm-nope", params_for_source("thm-k", 4, 2, 0)),
                  HypothesisError);
}

TEST_CASE("all-ones tuple for ell = k - 1") {
  SchurParams p = params_for_source("trivial-km1", 6, 3, 0, 5);
  const auto set = proof_tuples("trivial-km1", p);
  REQUIRE(set.tuples.size() == 1);
  CHECK(set.tuples[0].witness.entries == std::vector<int>(6, 1));
  CHECK(set.tuples[0].zero_sum_claimed);
}
