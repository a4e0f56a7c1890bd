#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zsschur/params.hpp"

namespace zsschur {

struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class FormulaKind { Exact, UpperBound, LowerBound };

std::string to_string(FormulaKind kind);

/// One evaluated closed-form value or bound. `params` identifies the
/// constant the statement is about (absent for trivial-km1, which holds for
/// every k and r with r | k); `aux` carries formula internals such as the
/// block decomposition (t, i) or the parameter u.
struct FormulaValue {
  std::optional<SchurParams> params;
  FormulaKind kind = FormulaKind::Exact;
  long long value = 0;
  std::string source;  // thm-k, thm-2, thm-v-upper, thm-general, thm-more,
                       // prior-rk, metz-upper, metz-lower, trivial-km1
  std::map<std::string, long long> aux;
};

// The constant for ell = k, eps = 1, v = 0 with two colors:
//   3 when r = 2 and k >= 4; 4 when r >= 3 and k in {r, 2r};
//   3 when r >= 3 and k >= 3r.
FormulaValue value_thm_k(int k, int r);

// Upper bound ceil(k/4) + k/2 - 1 for ell = 2, r = m = 2, eps = 1, v = 0;
// k even, k >= 4.
FormulaValue upper_thm_2(int k);

// Upper bound k/2 - 2v for ell = 1, r = m = 2, eps = 1; k even,
// 1 <= v <= floor((k-1)/4).
FormulaValue upper_thm_v(int k, int v);

// Writing k = 10t + s with s in {0,2,4,6,8}: u = t when s in {6,8},
// u = t - 1 when s in {0,2,4}. Requires k even, k >= 6.
int u_of_k(int k);

// Exact value k/2 - u_of_k(k) - 2 for ell = 1, r = m = 2, eps = 1, v = 1;
// k even, k >= 6.
FormulaValue value_thm_general(int k);

// Exact value k/r - floor((v-1)k / (vr)) - 1 for ell = 1, eps = 0, m = r.
// aux carries the decomposition k - 2vr = v*r*t + i*r with i in [1, v]
// when k > 2vr.
FormulaValue value_thm_more(int k, int r, int v);

// Quoted prior result rk - 2r + 1 for ell = 1, eps = 1, v = 0, m = 2;
// r | k, k > r.
FormulaValue value_prior_rk(int k, int r);

// Quoted bounds for S_z(k; r), i.e. ell = 1, eps = 1, v = 0, m = r.
// Only the bounds whose hypotheses hold are returned:
//   lower: kr - r (r odd), kr - r - 1 (r even); needs r | k.
//   upper: kr - r (r an odd prime), 4k - 5 (r = 4),
//          kr - sum(p_i - 1) - 1 over the prime decomposition (r >= 6);
//          needs additionally k >= 2r.
struct MetzBounds {
  std::optional<FormulaValue> lower;
  std::optional<FormulaValue> upper;
};
MetzBounds bounds_metz(int k, int r);

// The constant for ell = k - 1, eps = 1, v = 0 is 1 for every m >= 2:
// the all-ones tuple solves the equation and its color sum is k*chi(1),
// a multiple of r.
FormulaValue value_trivial_km1(int m);

// Trial-division factorization, ascending with multiplicity; guards n <= 10^6.
std::vector<long long> prime_factors(long long n);

// Canonical parameter tuple for the constant each source tag talks about.
// m_override is used by trivial-km1 (any m) and ignored elsewhere.
SchurParams params_for_source(const std::string& source, int k, int r, int v,
                              int m_override = 2);

}  // namespace zsschur
