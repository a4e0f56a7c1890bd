#pragma once

#include <optional>
#include <span>
#include <vector>

namespace zsschur {

// Single-equation regularity test: a linear homogeneous equation with
// coefficient vector a admits a monochromatic solution under every finite
// coloring iff some nonempty subset of the coefficients sums to zero.
// Decided exactly by dynamic programming over offset subset sums.
//
// Throws InvalidParams on empty or all-zero input, or when the sum of
// absolute values exceeds the supported range guard.
bool rado_regular(std::span<const long long> coeffs);

// Indices (ascending) of one nonempty zero-sum subset, or nullopt when the
// equation is not regular. Same preconditions as rado_regular.
std::optional<std::vector<std::size_t>> zero_sum_subset(
    std::span<const long long> coeffs);

}  // namespace zsschur
