#pragma once

#include <cstdint>
#include <vector>

#include "zsschur/params.hpp"

namespace zsschur {

/// A k-tuple (x_1, ..., x_k) of positive integers proposed as a solution.
/// Entries are 1-indexed values; when paired with a coloring of [1,t] every
/// entry must lie in [1, t].
struct Witness {
  std::vector<int> entries;

  bool operator==(const Witness&) const = default;
};

/// Coefficient view of the equation
///   x_1 + ... + x_A  =  x_{A+1} + ... + x_{A+B} + ell * x_k
/// where A = k - (r v + eps) and B = r v + eps - 1.
struct Equation {
  int left_count = 0;        // A, >= 1
  int unit_right_count = 0;  // B, >= 0
  int last_coeff = 0;        // ell, >= 1
  int k = 0;                 // A + B + 1

  bool operator==(const Equation&) const = default;
};

// Validates params and derives the index split and the last coefficient.
Equation build_equation(const SchurParams& params);

// Signed coefficients with the right side moved across: A entries of +1,
// then B entries of -1, then -ell.
std::vector<long long> coefficient_vector(const Equation& eq);

// True iff sum of the first A entries equals sum of the next B entries plus
// ell times the last entry. Throws InvalidParams on length mismatch or a
// non-positive entry.
bool is_solution(const Equation& eq, const Witness& w);

// Smallest/largest possible value of each side over entries in [1, t].
long long min_left_sum(const Equation& eq);
long long max_left_sum(const Equation& eq, int t);
long long min_right_sum(const Equation& eq);
long long max_right_sum(const Equation& eq, int t);

}  // namespace zsschur
