#include "zsschur/formulas.hpp"

namespace zsschur {

std::string to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Exact: return "exact";
    case FormulaKind::UpperBound: return "upper-bound";
    case FormulaKind::LowerBound: return "lower-bound";
  }
  return "unknown";
}

namespace {

void require(bool ok, const std::string& hypothesis) {
  if (!ok) throw HypothesisError("hypothesis violated: " + hypothesis);
}

SchurParams make_params(int k, int r, int m, int ell, int eps, int v) {
  SchurParams p;
  p.k = k; p.r = r; p.m = m; p.ell = ell; p.eps = eps; p.v = v;
  p.validate();
  return p;
}

}  // namespace

SchurParams params_for_source(const std::string& source, int k, int r, int v,
                              int m_override) {
  if (source == "thm-k") return make_params(k, r, 2, k, 1, 0);
  if (source == "thm-2") return make_params(k, 2, 2, 2, 1, 0);
  if (source == "thm-v-upper") return make_params(k, 2, 2, 1, 1, v);
  if (source == "thm-general") return make_params(k, 2, 2, 1, 1, 1);
  if (source == "thm-more") return make_params(k, r, r, 1, 0, v);
  if (source == "prior-rk") return make_params(k, r, 2, 1, 1, 0);
  if (source == "metz-lower" || source == "metz-upper")
    return make_params(k, r, r, 1, 1, 0);
  if (source == "trivial-km1")
    return make_params(k, r, m_override, k - 1, 1, 0);
  throw HypothesisError("unknown source tag: " + source);
}

FormulaValue value_thm_k(int k, int r) {
  require(r >= 2, "r >= 2");
  require(k >= 2, "k >= 2");
  require(k % r == 0, "r | k");
  FormulaValue out;
  out.kind = FormulaKind::Exact;
  out.source = "thm-k";
  if (r == 2) {
    require(k >= 4, "k >= 4 when r = 2");
    out.value = 3;
  } else if (k == r || k == 2 * r) {
    out.value = 4;
  } else {  // r | k forces k >= 3r here
    out.value = 3;
  }
  out.params = params_for_source("thm-k", k, r, 0);
  return out;
}

FormulaValue upper_thm_2(int k) {
  require(k >= 4, "k >= 4");
  require(k % 2 == 0, "k even");
  FormulaValue out;
  out.kind = FormulaKind::UpperBound;
  out.source = "thm-2";
  out.value = (k + 3) / 4 + k / 2 - 1;  // ceil(k/4) + k/2 - 1
  out.params = params_for_source("thm-2", k, 2, 0);
  return out;
}

FormulaValue upper_thm_v(int k, int v) {
  require(k % 2 == 0, "k even");
  require(v >= 1, "v >= 1");
  require(v <= (k - 1) / 4, "v <= floor((k-1)/4)");
  FormulaValue out;
  out.kind = FormulaKind::UpperBound;
  out.source = "thm-v-upper";
  out.value = k / 2 - 2 * v;
  out.params = params_for_source("thm-v-upper", k, 2, v);
  return out;
}

int u_of_k(int k) {
  require(k % 2 == 0, "k even");
  require(k >= 6, "k >= 6");
  const int t = k / 10, s = k % 10;
  return (s == 6 || s == 8) ? t : t - 1;
}

FormulaValue value_thm_general(int k) {
  const int u = u_of_k(k);
  FormulaValue out;
  out.kind = FormulaKind::Exact;
  out.source = "thm-general";
  out.value = k / 2 - u - 2;
  out.aux["u"] = u;
  out.params = params_for_source("thm-general", k, 2, 1);
  return out;
}

FormulaValue value_thm_more(int k, int r, int v) {
  require(r >= 2, "r >= 2");
  require(k >= 2 && k % r == 0, "r | k");
  require(v >= 1, "v >= 1");
  require(2 * r * v <= k, "v <= floor(k/(2r))");
  FormulaValue out;
  out.kind = FormulaKind::Exact;
  out.source = "thm-more";
  out.value = k / r - ((static_cast<long long>(v) - 1) * k) / (static_cast<long long>(v) * r) - 1;
  if (k > 2 * v * r) {
    // k - 2vr = v*r*t + i*r with i in [1, v]; when v | (k/r - 2v) this picks
    // i = v and t = (k - 2vr)/(vr) - 1.
    const int d = k / r - 2 * v;
    const int t = (d + v - 1) / v - 1;
    const int i = d - v * t;
    out.aux["t"] = t;
    out.aux["i"] = i;
  }
  out.params = params_for_source("thm-more", k, r, v);
  return out;
}

FormulaValue value_prior_rk(int k, int r) {
  require(r >= 2, "r >= 2");
  require(k % r == 0, "r | k");
  require(k > r, "k > r");
  FormulaValue out;
  out.kind = FormulaKind::Exact;
  out.source = "prior-rk";
  out.value = static_cast<long long>(r) * k - 2LL * r + 1;
  out.params = params_for_source("prior-rk", k, r, 0);
  return out;
}

std::vector<long long> prime_factors(long long n) {
  require(n >= 2, "n >= 2");
  require(n <= 1'000'000, "n <= 10^6 (trial-division guard)");
  std::vector<long long> factors;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      factors.push_back(p);
      n /= p;
    }
  if (n > 1) factors.push_back(n);
  return factors;
}

FormulaValue value_trivial_km1(int m) {
  require(m >= 2, "m >= 2");
  FormulaValue out;
  out.kind = FormulaKind::Exact;
  out.source = "trivial-km1";
  out.value = 1;
  out.aux["m"] = m;
  return out;
}

MetzBounds bounds_metz(int k, int r) {
  require(r >= 2, "r >= 2");
  require(k >= 2 && k % r == 0, "r | k");
  MetzBounds bounds;

  FormulaValue lower;
  lower.kind = FormulaKind::LowerBound;
  lower.source = "metz-lower";
  lower.value = static_cast<long long>(k) * r - r - (r % 2 == 0 ? 1 : 0);
  lower.params = params_for_source("metz-lower", k, r, 0);
  bounds.lower = std::move(lower);

  if (k >= 2 * r) {
    const auto factors = prime_factors(r);
    const bool odd_prime = (r % 2 == 1 && factors.size() == 1);
    std::optional<long long> upper_value;
    if (odd_prime) {
      upper_value = static_cast<long long>(k) * r - r;
    } else if (r == 4) {
      upper_value = 4LL * k - 5;
    } else if (r >= 6) {
      long long deficit = 0;
      for (long long p : factors) deficit += p - 1;
      upper_value = static_cast<long long>(k) * r - deficit - 1;
    }
    if (upper_value) {
      FormulaValue upper;
      upper.kind = FormulaKind::UpperBound;
      upper.source = "metz-upper";
      upper.value = *upper_value;
      upper.params = params_for_source("metz-upper", k, r, 0);
      bounds.upper = std::move(upper);
    }
  }
  return bounds;
}

}  // namespace zsschur
