#include "zsschur/coloring.hpp"

#include <string>

namespace zsschur {

int Coloring::at(int i) const {
  if (i < 1 || i > t)
    throw InvalidParams("value " + std::to_string(i) +
                        " is outside the coloring domain [1, " +
                        std::to_string(t) + "]");
  return colors[static_cast<std::size_t>(i - 1)];
}

void Coloring::validate() const {
  if (t < 1) throw InvalidParams("coloring domain size t must be >= 1");
  if (t > kMaxDomain)
    throw InvalidParams("coloring domain exceeds the supported cap of 10^4");
  if (m < 2) throw InvalidParams("coloring must use m >= 2 colors");
  if (static_cast<int>(colors.size()) != t)
    throw InvalidParams("coloring has " + std::to_string(colors.size()) +
                        " entries, domain size is " + std::to_string(t));
  for (std::uint8_t c : colors)
    if (c >= m)
      throw InvalidParams("color value " + std::to_string(int{c}) +
                          " is outside [0, m-1]");
}

Coloring make_coloring(int m, std::vector<std::uint8_t> colors) {
  Coloring chi;
  chi.t = static_cast<int>(colors.size());
  chi.m = m;
  chi.colors = std::move(colors);
  chi.validate();
  return chi;
}

int color_sum(const Coloring& chi, const Witness& w, int r) {
  if (r < 2) throw InvalidParams("r must be >= 2");
  long long sum = 0;
  for (int x : w.entries) sum += chi.at(x);
  return static_cast<int>(sum % r);
}

}  // namespace zsschur
