#include "zsschur/params.hpp"

#include <sstream>

namespace zsschur {

void SchurParams::validate() const {
  auto fail = [](const std::string& msg) { throw InvalidParams(msg); };

  if (k < 2) fail("k must be >= 2");
  if (k > kMaxVariables) fail("k exceeds the supported cap of 64 variables");
  if (r < 2) fail("r must be >= 2");
  if (m < 2) fail("m must be >= 2");
  if (k % r != 0) fail("r must divide k");
  if (ell < 1 || ell > k) fail("ell must be in [1, k]");
  if (eps != 0 && eps != 1) fail("eps must be 0 or 1");
  if (v < 0 || v > max_v(k, r))
    fail("v must be in [0, floor(k / (2r))] = [0, " +
         std::to_string(max_v(k, r)) + "]");
  // Right side must contain at least ell * x_k plus a nonnegative number of
  // unit terms, and the left side must be nonempty.
  if (r * v + eps < 1) fail("right side is empty: r*v + eps must be >= 1");
  if (k - (r * v + eps) < 1) fail("left side is empty: k - (r*v + eps) must be >= 1");
}

std::string to_string(const SchurParams& p) {
  std::ostringstream os;
  os << "(k=" << p.k << ", r=" << p.r << ", m=" << p.m << ", ell=" << p.ell
     << ", eps=" << p.eps << ", v=" << p.v << ")";
  return os.str();
}

}  // namespace zsschur
