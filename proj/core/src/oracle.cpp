#include "zsschur/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <string>
#include <thread>

namespace zsschur {

namespace {

void check_oracle_args(const Equation& eq, int t, int m, int r) {
  if (t < 1) throw InvalidParams("t must be >= 1");
  if (t > kMaxDomain)
    throw InvalidParams("t exceeds the supported cap of 10^4");
  if (r < 2) throw InvalidParams("r must be >= 2");
  if (m < 2) throw InvalidParams("m must be >= 2");
  if (eq.k % r != 0)
    throw InvalidParams("r must divide k (the symmetry reductions rely on it)");
}

}  // namespace

BlockDPTable::BlockDPTable(int vars, const Coloring& chi, int r)
    : vars_(vars), r_(r), max_sum_(static_cast<long long>(vars) * chi.t) {
  const std::size_t bits = static_cast<std::size_t>(max_sum_) + 1;
  stages_.resize(static_cast<std::size_t>(vars) + 1);
  for (auto& stage : stages_) {
    stage.resize(static_cast<std::size_t>(r));
    for (auto& row : stage) row.reset(bits);
  }
  stages_[0][0].set(0);
  for (int used = 1; used <= vars; ++used) {
    const auto& prev = stages_[static_cast<std::size_t>(used - 1)];
    auto& cur = stages_[static_cast<std::size_t>(used)];
    for (int c = 0; c < r; ++c) {
      if (!prev[static_cast<std::size_t>(c)].any()) continue;
      for (int x = 1; x <= chi.t; ++x) {
        const int c2 = (c + chi.colors[static_cast<std::size_t>(x - 1)]) % r;
        cur[static_cast<std::size_t>(c2)].or_shift_from(
            prev[static_cast<std::size_t>(c)], static_cast<std::size_t>(x));
      }
    }
  }
}

bool BlockDPTable::reachable(int used, long long sum, int color_residue) const {
  if (used < 0 || used > vars_ || sum < 0 || color_residue < 0 ||
      color_residue >= r_)
    return false;
  return stages_[static_cast<std::size_t>(used)]
                [static_cast<std::size_t>(color_residue)]
                    .test(static_cast<std::size_t>(sum));
}

const BitRow& BlockDPTable::stage(int used, int color_residue) const {
  return stages_.at(static_cast<std::size_t>(used))
      .at(static_cast<std::size_t>(color_residue));
}

bool range_infeasible(const Equation& eq, int t) {
  if (t < 1) throw InvalidParams("t must be >= 1");
  return min_left_sum(eq) > max_right_sum(eq, t) ||
         max_left_sum(eq, t) < min_right_sum(eq);
}

namespace {

// Reusable buffers for the existence check run once per coloring inside the
// enumeration loop. Only two DP stages are live at a time.
struct DpScratch {
  std::vector<BitRow> cur, nxt;     // left block rows, indexed by residue
  std::vector<BitRow> right;        // final right-block rows
  std::vector<BitRow> right_swap;
  Coloring chi;

  void prepare(const Equation& eq, int t, int m, int r) {
    const std::size_t bits_left =
        static_cast<std::size_t>(eq.left_count) * t + 1;
    const std::size_t bits_right =
        static_cast<std::size_t>(eq.unit_right_count) * t + 1;
    resize_rows(cur, r, bits_left);
    resize_rows(nxt, r, bits_left);
    resize_rows(right, r, bits_right);
    resize_rows(right_swap, r, bits_right);
    chi.t = t;
    chi.m = m;
    chi.colors.assign(static_cast<std::size_t>(t), 0);
  }

 private:
  static void resize_rows(std::vector<BitRow>& rows, int r, std::size_t bits) {
    rows.resize(static_cast<std::size_t>(r));
    for (auto& row : rows) row.reset(bits);
  }
};

void run_block_dp(std::vector<BitRow>& cur, std::vector<BitRow>& nxt,
                  int vars, const Coloring& chi, int r) {
  for (auto& row : cur) row.clear();
  cur[0].set(0);
  for (int used = 1; used <= vars; ++used) {
    for (auto& row : nxt) row.clear();
    for (int c = 0; c < r; ++c) {
      if (!cur[static_cast<std::size_t>(c)].any()) continue;
      for (int x = 1; x <= chi.t; ++x) {
        const int c2 = (c + chi.colors[static_cast<std::size_t>(x - 1)]) % r;
        nxt[static_cast<std::size_t>(c2)].or_shift_from(
            cur[static_cast<std::size_t>(c)], static_cast<std::size_t>(x));
      }
    }
    cur.swap(nxt);
  }
}

// Existence-only variant of exists_zero_sum_solution sharing its DP.
bool admits_zero_sum_solution(const Equation& eq, const Coloring& chi, int r,
                              DpScratch& scratch) {
  if (range_infeasible(eq, chi.t)) return false;
  run_block_dp(scratch.cur, scratch.nxt, eq.left_count, chi, r);
  run_block_dp(scratch.right, scratch.right_swap, eq.unit_right_count, chi, r);
  const long long max_left = max_left_sum(eq, chi.t);
  for (int xk = 1; xk <= chi.t; ++xk) {
    const long long shift = static_cast<long long>(eq.last_coeff) * xk;
    if (shift > max_left) break;
    const int cx = chi.colors[static_cast<std::size_t>(xk - 1)];
    for (int cl = 0; cl < r; ++cl) {
      const int cr = ((-(cl + cx)) % r + r) % r;
      if (scratch.cur[static_cast<std::size_t>(cl)].intersects_shift(
              scratch.right[static_cast<std::size_t>(cr)],
              static_cast<std::size_t>(shift)))
        return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Witness> exists_zero_sum_solution(const Equation& eq,
                                                const Coloring& chi, int r) {
  chi.validate();
  check_oracle_args(eq, chi.t, chi.m, r);
  if (range_infeasible(eq, chi.t)) return std::nullopt;

  const int A = eq.left_count, B = eq.unit_right_count, t = chi.t;
  const BlockDPTable left(A, chi, r);
  const BlockDPTable right(B, chi, r);

  // match[c]: total left sums completable by the right block plus x_k with
  // combined color residue -c (mod r).
  const std::size_t bits_left = static_cast<std::size_t>(A) * t + 1;
  std::vector<BitRow> match(static_cast<std::size_t>(r), BitRow(bits_left));
  for (int c = 0; c < r; ++c) {
    for (int xk = 1; xk <= t; ++xk) {
      const long long shift = static_cast<long long>(eq.last_coeff) * xk;
      if (shift >= static_cast<long long>(bits_left)) break;
      const int cx = chi.colors[static_cast<std::size_t>(xk - 1)];
      const int cr = ((-(c + cx)) % r + r) % r;
      match[static_cast<std::size_t>(c)].or_shift_from(
          right.stage(B, cr), static_cast<std::size_t>(shift));
    }
  }

  const auto left_feasible = [&](int remaining, long long sum, int c) {
    for (int c2 = 0; c2 < r; ++c2) {
      const int total_c = (c + c2) % r;
      if (match[static_cast<std::size_t>(total_c)].intersects_shift(
              left.stage(remaining, c2), static_cast<std::size_t>(sum)))
        return true;
    }
    return false;
  };

  if (!left_feasible(A, 0, 0)) return std::nullopt;

  Witness w;
  w.entries.reserve(static_cast<std::size_t>(eq.k));

  // Commit the least value position by position; feasibility of a partial
  // assignment is checked against the tables for the remaining variables.
  long long sigma = 0;
  int c_left = 0;
  for (int pos = 0; pos < A; ++pos) {
    int committed = 0;
    for (int x = 1; x <= t; ++x) {
      const int c2 = (c_left + chi.colors[static_cast<std::size_t>(x - 1)]) % r;
      if (left_feasible(A - pos - 1, sigma + x, c2)) {
        w.entries.push_back(x);
        sigma += x;
        c_left = c2;
        committed = x;
        break;
      }
    }
    if (committed == 0)
      throw std::logic_error("witness reconstruction lost feasibility (left)");
  }

  const auto right_feasible = [&](int remaining, long long tau, int d) {
    for (int xk = 1; xk <= t; ++xk) {
      const long long need =
          sigma - tau - static_cast<long long>(eq.last_coeff) * xk;
      if (need < 0) break;
      const int cx = chi.colors[static_cast<std::size_t>(xk - 1)];
      for (int c2 = 0; c2 < r; ++c2) {
        if ((c_left + d + c2 + cx) % r != 0) continue;
        if (right.reachable(remaining, need, c2)) return true;
      }
    }
    return false;
  };

  long long tau = 0;
  int d_right = 0;
  for (int pos = 0; pos < B; ++pos) {
    int committed = 0;
    for (int x = 1; x <= t; ++x) {
      const int d2 = (d_right + chi.colors[static_cast<std::size_t>(x - 1)]) % r;
      if (right_feasible(B - pos - 1, tau + x, d2)) {
        w.entries.push_back(x);
        tau += x;
        d_right = d2;
        committed = x;
        break;
      }
    }
    if (committed == 0)
      throw std::logic_error("witness reconstruction lost feasibility (right)");
  }

  for (int xk = 1; xk <= t; ++xk) {
    const long long rhs = tau + static_cast<long long>(eq.last_coeff) * xk;
    if (rhs != sigma) continue;
    const int cx = chi.colors[static_cast<std::size_t>(xk - 1)];
    if ((c_left + d_right + cx) % r != 0) continue;
    w.entries.push_back(xk);
    return w;
  }
  // Unreachable when the feasibility invariant holds at every step.
  throw std::logic_error("witness reconstruction lost feasibility");
}

namespace {

std::uint64_t choose_capped(long long n, long long k, std::uint64_t cap) {
  if (k < 0 || n < k) return 0;
  std::uint64_t result = 1;
  for (long long i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral when done in this order.
    const unsigned __int128 num =
        static_cast<unsigned __int128>(result) *
        static_cast<unsigned __int128>(n - k + i);
    const unsigned __int128 val = num / static_cast<unsigned __int128>(i);
    if (val > cap) return cap + 1;
    result = static_cast<std::uint64_t>(val);
  }
  return result;
}

// Advances a nondecreasing tuple over [1, t] in lexicographic order.
bool next_nondecreasing(std::vector<int>& tuple, int t) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (tuple[i] < t) {
      const int value = tuple[i] + 1;
      for (std::size_t j = i; j < tuple.size(); ++j) tuple[j] = value;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Witness> naive_exists(const Equation& eq, const Coloring& chi,
                                    int r, std::uint64_t budget) {
  chi.validate();
  check_oracle_args(eq, chi.t, chi.m, r);

  const int A = eq.left_count, B = eq.unit_right_count, t = chi.t;
  const std::uint64_t lefts = choose_capped(t + A - 1, A, budget);
  const std::uint64_t rights = choose_capped(t + B - 1, B, budget);
  const unsigned __int128 total = static_cast<unsigned __int128>(lefts) *
                                  rights * static_cast<unsigned __int128>(t);
  if (total > budget)
    throw BudgetExceeded(
        "naive enumeration of " + std::to_string(A) + "+" + std::to_string(B) +
        "+1 variables over [1, " + std::to_string(t) +
        "] exceeds the budget of " + std::to_string(budget) + " tuples");

  std::vector<int> a(static_cast<std::size_t>(A), 1);
  do {
    long long left = 0;
    int c_left = 0;
    for (int x : a) {
      left += x;
      c_left = (c_left + chi.colors[static_cast<std::size_t>(x - 1)]) % r;
    }
    if (left < min_right_sum(eq) || left > max_right_sum(eq, t)) continue;

    std::vector<int> b(static_cast<std::size_t>(B), 1);
    do {
      long long unit_right = 0;
      int c_right = 0;
      for (int x : b) {
        unit_right += x;
        c_right = (c_right + chi.colors[static_cast<std::size_t>(x - 1)]) % r;
      }
      for (int xk = 1; xk <= t; ++xk) {
        if (unit_right + static_cast<long long>(eq.last_coeff) * xk != left)
          continue;
        const int cx = chi.colors[static_cast<std::size_t>(xk - 1)];
        if ((c_left + c_right + cx) % r != 0) continue;
        Witness w;
        w.entries.reserve(static_cast<std::size_t>(eq.k));
        w.entries.insert(w.entries.end(), a.begin(), a.end());
        w.entries.insert(w.entries.end(), b.begin(), b.end());
        w.entries.push_back(xk);
        return w;
      }
    } while (next_nondecreasing(b, t));
  } while (next_nondecreasing(a, t));
  return std::nullopt;
}

namespace {

// Description of the (possibly symmetry-reduced) coloring space of [1, t].
struct ColoringSpace {
  int t = 0;
  int m = 0;
  bool first_fixed = false;  // chi(1) pinned to color 0
  std::uint64_t count = 0;   // number of colorings enumerated
  bool overflow = false;

  static ColoringSpace make(int t, int m, int r) {
    ColoringSpace space;
    space.t = t;
    space.m = m;
    space.first_fixed = (m == 2 || m == r);
    const int free_positions = t - (space.first_fixed ? 1 : 0);
    space.count = 1;
    for (int i = 0; i < free_positions; ++i) {
      if (space.count > (std::numeric_limits<std::uint64_t>::max)() /
                            static_cast<std::uint64_t>(m)) {
        space.overflow = true;
        break;
      }
      space.count *= static_cast<std::uint64_t>(m);
    }
    return space;
  }

  // Index -> coloring, most significant digit first, so index order is
  // lexicographic order on (chi(1), ..., chi(t)).
  void decode(std::uint64_t index, Coloring& out) const {
    out.t = t;
    out.m = m;
    out.colors.resize(static_cast<std::size_t>(t));
    const int first_free = first_fixed ? 1 : 0;
    if (first_fixed) out.colors[0] = 0;
    for (int pos = t - 1; pos >= first_free; --pos) {
      out.colors[static_cast<std::size_t>(pos)] =
          static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(m));
      index /= static_cast<std::uint64_t>(m);
    }
  }
};

constexpr std::uint64_t kChunk = 4096;
constexpr std::uint64_t kNoCounterexample =
    (std::numeric_limits<std::uint64_t>::max)();

void scan_worker(const Equation& eq, const ColoringSpace& space, int r,
                 std::atomic<std::uint64_t>& next_chunk,
                 std::atomic<std::uint64_t>& best) {
  DpScratch scratch;
  scratch.prepare(eq, space.t, space.m, r);
  while (true) {
    const std::uint64_t chunk = next_chunk.fetch_add(1);
    const std::uint64_t start = chunk * kChunk;
    if (start >= space.count) return;
    // Every index in this and all later chunks exceeds the best
    // counterexample already found; nothing smaller can appear here.
    if (start > best.load(std::memory_order_acquire)) return;
    const std::uint64_t stop = std::min(space.count, start + kChunk);
    for (std::uint64_t index = start; index < stop; ++index) {
      space.decode(index, scratch.chi);
      if (!admits_zero_sum_solution(eq, scratch.chi, r, scratch)) {
        std::uint64_t seen = best.load(std::memory_order_acquire);
        while (index < seen &&
               !best.compare_exchange_weak(seen, index,
                                           std::memory_order_acq_rel)) {
        }
        break;  // later indices in this chunk are larger
      }
    }
  }
}

}  // namespace

ColoringSearchOutcome every_coloring_admits(const Equation& eq, int t, int m,
                                            int r, const SearchOptions& opts) {
  check_oracle_args(eq, t, m, r);
  const ColoringSpace space = ColoringSpace::make(t, m, r);
  if (space.overflow)
    throw BudgetExceeded("coloring space for t=" + std::to_string(t) +
                         " does not fit in 64 bits");
  if (space.count > opts.coloring_budget && !opts.force)
    throw BudgetExceeded(
        "reduced coloring space has " + std::to_string(space.count) +
        " elements, over the budget of " + std::to_string(opts.coloring_budget) +
        " (pass force to search anyway)");

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best{kNoCounterexample};
  const int threads = std::max(1, opts.threads);
  if (threads == 1 || space.count <= kChunk) {
    scan_worker(eq, space, r, next_chunk, best);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i)
      pool.emplace_back(scan_worker, std::cref(eq), std::cref(space), r,
                        std::ref(next_chunk), std::ref(best));
    for (auto& th : pool) th.join();
  }

  ColoringSearchOutcome outcome;
  const std::uint64_t found = best.load();
  if (found == kNoCounterexample) {
    outcome.every_admits = true;
    return outcome;
  }
  Coloring cex;
  space.decode(found, cex);
  outcome.every_admits = false;
  outcome.counterexample = std::move(cex);
  return outcome;
}

int default_t_max(const SchurParams& params) {
  const long long cap = 4LL * params.k * params.r;
  return static_cast<int>(std::min<long long>(cap, kMaxDomain));
}

SearchResult compute_schur_number(const SchurParams& params, int t_max,
                                  const SearchOptions& opts) {
  params.validate();
  if (t_max < 1) throw InvalidParams("t_max must be >= 1");
  if (t_max > kMaxDomain)
    throw InvalidParams("t_max exceeds the supported cap of 10^4");
  const Equation eq = build_equation(params);

  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.params = params;
  result.t_max = t_max;

  std::optional<Coloring> last_counterexample;
  for (int t = 1; t <= t_max; ++t) {
    ColoringSearchOutcome outcome =
        every_coloring_admits(eq, t, params.m, params.r, opts);
    if (outcome.every_admits) {
      result.value = t;
      break;
    }
    last_counterexample = std::move(outcome.counterexample);
  }
  // Found: the scan of value-1 produced the blocking coloring, so the value
  // is verified on both sides. Exhausted: report the coloring at t_max.
  result.certificate = std::move(last_counterexample);

  result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace zsschur
