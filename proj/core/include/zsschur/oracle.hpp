#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zsschur/bitrow.hpp"
#include "zsschur/coloring.hpp"
#include "zsschur/equation.hpp"
#include "zsschur/params.hpp"

namespace zsschur {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  int threads = 1;
  // Refuse coloring scans larger than this unless force is set.
  std::uint64_t coloring_budget = std::uint64_t{1} << 28;
  bool force = false;
};

/// Reachable (variables used, partial sum, color-sum mod r) states for one
/// block of interchangeable unit-coefficient variables taking values in
/// [1, chi.t]. Stage j holds the sums reachable with exactly j variables,
/// split by color residue.
class BlockDPTable {
 public:
  BlockDPTable(int vars, const Coloring& chi, int r);

  int vars() const { return vars_; }
  int residues() const { return r_; }
  long long max_sum() const { return max_sum_; }

  bool reachable(int used, long long sum, int color_residue) const;
  const BitRow& stage(int used, int color_residue) const;

 private:
  int vars_ = 0;
  int r_ = 0;
  long long max_sum_ = 0;
  std::vector<std::vector<BitRow>> stages_;  // [used][residue] -> sums
};

// No entry of [1,t]^k can solve the equation for arithmetic reasons alone:
// the smallest left sum already beats the largest right sum or vice versa.
bool range_infeasible(const Equation& eq, int t);

// Least witness (lexicographic over the full tuple) solving eq with entries
// in [1, chi.t] and color sum 0 mod r, or nullopt when none exists.
// Built from the left/right block tables; the witness is reconstructed by
// committing the smallest feasible value at each position.
std::optional<Witness> exists_zero_sum_solution(const Equation& eq,
                                                const Coloring& chi, int r);

// Independent brute-force route for cross-validation: enumerates
// nondecreasing left and right unit blocks plus the last variable.
// Returns the same least witness as exists_zero_sum_solution.
// Throws BudgetExceeded when the enumeration would exceed `budget` tuples.
std::optional<Witness> naive_exists(const Equation& eq, const Coloring& chi,
                                    int r,
                                    std::uint64_t budget = 50'000'000);

struct ColoringSearchOutcome {
  bool every_admits = false;
  // Lexicographically smallest coloring with no zero-sum solution; present
  // iff every_admits is false.
  std::optional<Coloring> counterexample;
};

// Does every m-coloring of [1, t] admit an r-zero-sum solution of eq?
// Sound symmetry reductions fix chi(1) = 0: complementation when m == 2 and
// translation when m == r (both need r | k, which holds for every valid
// parameter tuple). The scan is partitioned into fixed index ranges and the
// partition results are merged by taking the least counterexample, so the
// outcome is identical for any thread count.
ColoringSearchOutcome every_coloring_admits(const Equation& eq, int t, int m,
                                            int r,
                                            const SearchOptions& opts = {});

struct SearchResult {
  SchurParams params;
  std::optional<int> value;  // nullopt: not found up to t_max
  std::optional<Coloring> certificate;  // blocking coloring of [1, value-1]
  int t_max = 0;
  long long elapsed_ms = 0;
};

// 4*k*r covers every value in the supported closed-form tables with slack.
int default_t_max(const SchurParams& params);

// Least t <= t_max such that every coloring of [1, t] admits an r-zero-sum
// solution. Scans t upward, so the returned certificate is the blocking
// coloring found at value-1 (absent when the value is 1). When no t <= t_max
// works, value is empty and the certificate is the counterexample at t_max.
SearchResult compute_schur_number(const SchurParams& params, int t_max,
                                  const SearchOptions& opts = {});

}  // namespace zsschur
