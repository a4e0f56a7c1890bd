#pragma once

#include <cstdint>
#include <vector>

#include "zsschur/equation.hpp"
#include "zsschur/params.hpp"

namespace zsschur {

/// An m-coloring of the interval [1, t]. Stored 0-indexed:
/// colors[i-1] == chi(i), each value in {0, ..., m-1}.
struct Coloring {
  int t = 0;
  int m = 0;
  std::vector<std::uint8_t> colors;

  // chi(i) for 1-indexed i; throws InvalidParams when i is outside [1, t].
  int at(int i) const;

  // Throws InvalidParams when sizes or color values are inconsistent.
  void validate() const;

  bool operator==(const Coloring&) const = default;
};

// Convenience constructor for tests and certificates.
Coloring make_coloring(int m, std::vector<std::uint8_t> colors);

// (sum_i chi(x_i)) mod r, in [0, r-1]. Throws InvalidParams when an entry of
// w is outside [1, chi.t].
int color_sum(const Coloring& chi, const Witness& w, int r);

}  // namespace zsschur
