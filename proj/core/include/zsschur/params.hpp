#pragma once

#include <stdexcept>
#include <string>

namespace zsschur {

// Desk-scale guards: every sum handled by the search fits in a signed
// 64-bit integer as long as k <= 64 and t <= 10^4.
inline constexpr int kMaxVariables = 64;
inline constexpr int kMaxDomain = 10000;

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parameter tuple (k, r, m, ell, eps, v) identifying one zero-sum
/// generalized Schur constant.
///
/// The underlying equation is
///   x_1 + ... + x_{k-(r v + eps)} = x_{k-(r v + eps - 1)} + ... + x_{k-1} + ell * x_k
/// with k variables; a coloring chi : [1,t] -> {0,...,m-1} satisfies the
/// r-zero-sum condition on a solution when sum_i chi(x_i) == 0 (mod r).
struct SchurParams {
  int k = 0;    // number of variables, >= 2, r | k
  int r = 0;    // zero-sum modulus, >= 2
  int m = 0;    // number of colors, >= 2
  int ell = 0;  // coefficient of the last variable, in [1, k]
  int eps = 0;  // 0 or 1
  int v = 0;    // block parameter, in [0, floor(k / (2r))]

  // Largest legal v for given k and r. The balanced case 2 r v == k is
  // included: it is exactly the configuration whose value is 1.
  static int max_v(int k, int r) { return k / (2 * r); }

  // Throws InvalidParams naming the violated constraint.
  void validate() const;

  bool operator==(const SchurParams&) const = default;
};

// Formats "(k=4, r=2, m=2, ell=4, eps=1, v=0)".
std::string to_string(const SchurParams& p);

}  // namespace zsschur
