#include "zsschur/rado.hpp"

#include <algorithm>
#include <cstdlib>

#include "zsschur/params.hpp"

namespace zsschur {

namespace {

// Sum guard: offset-sum DP allocates O(range) state.
constexpr long long kMaxAbsSumRange = 2'000'000;

}  // namespace

std::optional<std::vector<std::size_t>> zero_sum_subset(
    std::span<const long long> coeffs) {
  if (coeffs.empty()) throw InvalidParams("coefficient vector is empty");

  long long neg = 0, pos = 0;
  for (long long a : coeffs) {
    if (a < 0) neg += -a;
    else pos += a;
  }
  if (neg == 0 && pos == 0) throw InvalidParams("all coefficients are zero");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] == 0) return std::vector<std::size_t>{i};  // {0} sums to zero

  const long long range = neg + pos + 1;
  if (range > kMaxAbsSumRange)
    throw InvalidParams("coefficient magnitudes exceed the subset-sum range guard");

  // reachable[neg + s] for subset sums s in [-neg, pos]. step[x] records the
  // element that first reached offset x; from_empty[x] marks a singleton.
  std::vector<bool> reachable(static_cast<std::size_t>(range), false);
  std::vector<int> step(static_cast<std::size_t>(range), -1);
  std::vector<bool> from_empty(static_cast<std::size_t>(range), false);
  const long long zero_off = neg;

  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const long long a = coeffs[i];
    // Additions are committed after the scan so element i is used at most
    // once per subset.
    std::vector<std::pair<long long, bool>> added;  // (offset, from_empty)
    for (long long x = 0; x < range; ++x) {
      if (!reachable[static_cast<std::size_t>(x)]) continue;
      const long long y = x + a;
      if (y < 0 || y >= range) continue;
      if (!reachable[static_cast<std::size_t>(y)]) added.emplace_back(y, false);
    }
    const long long singleton = zero_off + a;
    if (singleton >= 0 && singleton < range &&
        !reachable[static_cast<std::size_t>(singleton)])
      added.emplace_back(singleton, true);
    for (auto [y, empty] : added) {
      reachable[static_cast<std::size_t>(y)] = true;
      step[static_cast<std::size_t>(y)] = static_cast<int>(i);
      from_empty[static_cast<std::size_t>(y)] = empty;
    }
    if (reachable[static_cast<std::size_t>(zero_off)]) break;
  }

  if (!reachable[static_cast<std::size_t>(zero_off)]) return std::nullopt;

  std::vector<std::size_t> subset;
  long long x = zero_off;
  while (true) {
    const int i = step[static_cast<std::size_t>(x)];
    subset.push_back(static_cast<std::size_t>(i));
    if (from_empty[static_cast<std::size_t>(x)]) break;
    x -= coeffs[static_cast<std::size_t>(i)];
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

bool rado_regular(std::span<const long long> coeffs) {
  return zero_sum_subset(coeffs).has_value();
}

}  // namespace zsschur
