#include "zsschur/equation.hpp"

#include <string>

namespace zsschur {

Equation build_equation(const SchurParams& params) {
  params.validate();
  Equation eq;
  eq.k = params.k;
  eq.left_count = params.k - (params.r * params.v + params.eps);
  eq.unit_right_count = params.r * params.v + params.eps - 1;
  eq.last_coeff = params.ell;
  return eq;
}

std::vector<long long> coefficient_vector(const Equation& eq) {
  std::vector<long long> coeffs;
  coeffs.reserve(static_cast<std::size_t>(eq.k));
  for (int i = 0; i < eq.left_count; ++i) coeffs.push_back(1);
  for (int i = 0; i < eq.unit_right_count; ++i) coeffs.push_back(-1);
  coeffs.push_back(-static_cast<long long>(eq.last_coeff));
  return coeffs;
}

bool is_solution(const Equation& eq, const Witness& w) {
  if (static_cast<int>(w.entries.size()) != eq.k)
    throw InvalidParams("witness has " + std::to_string(w.entries.size()) +
                        " entries, equation has k=" + std::to_string(eq.k));
  long long left = 0, right = 0;
  for (int i = 0; i < eq.k; ++i) {
    const int x = w.entries[static_cast<std::size_t>(i)];
    if (x < 1) throw InvalidParams("witness entries must be positive");
    if (i < eq.left_count)
      left += x;
    else if (i < eq.left_count + eq.unit_right_count)
      right += x;
    else
      right += static_cast<long long>(eq.last_coeff) * x;
  }
  return left == right;
}

long long min_left_sum(const Equation& eq) { return eq.left_count; }

long long max_left_sum(const Equation& eq, int t) {
  return static_cast<long long>(eq.left_count) * t;
}

long long min_right_sum(const Equation& eq) {
  return eq.unit_right_count + eq.last_coeff;
}

long long max_right_sum(const Equation& eq, int t) {
  return static_cast<long long>(eq.unit_right_count) * t +
         static_cast<long long>(eq.last_coeff) * t;
}

}  // namespace zsschur
