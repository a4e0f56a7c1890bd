#include "zsschur/certificates.hpp"

#include <map>
#include <stdexcept>

#include "zsschur/formulas.hpp"
#include "zsschur/oracle.hpp"

namespace zsschur {

namespace {

Coloring block_coloring(int m, int zeros, int ones) {
  std::vector<std::uint8_t> colors;
  colors.reserve(static_cast<std::size_t>(zeros) + static_cast<std::size_t>(ones));
  colors.insert(colors.end(), static_cast<std::size_t>(zeros), 0);
  colors.insert(colors.end(), static_cast<std::size_t>(ones), 1);
  return make_coloring(m, std::move(colors));
}

using Runs = std::vector<std::pair<int, int>>;  // (value, repetition count)

std::optional<Witness> witness_from_runs(const Runs& runs,
                                         std::string* reason) {
  Witness w;
  for (auto [value, count] : runs) {
    if (count < 0) {
      if (reason) *reason = "repetition count " + std::to_string(count) +
                            " of value " + std::to_string(value) +
                            " is negative";
      return std::nullopt;
    }
    if (count > 0 && value < 1) {
      if (reason) *reason = "entry value " + std::to_string(value) +
                            " is not positive";
      return std::nullopt;
    }
    w.entries.insert(w.entries.end(), static_cast<std::size_t>(count), value);
  }
  return w;
}

bool multiplicities_divisible(const Witness& w, int r) {
  std::map<int, int> mult;
  for (int x : w.entries) ++mult[x];
  for (auto [value, count] : mult)
    if (count % r != 0) return false;
  return true;
}

// Instantiates one construction; adds it to `out` or records why it is
// skipped. A construction that instantiates but fails the equation is a
// transcription bug, so it fails loudly.
void add_tuple(TupleSet& out, const SchurParams& params, const Equation& eq,
               const std::string& source, const Runs& runs) {
  std::string reason;
  auto w = witness_from_runs(runs, &reason);
  if (!w) {
    out.skipped.push_back(source + ": " + reason);
    return;
  }
  if (!is_solution(eq, *w))
    throw std::logic_error(source + ": constructed tuple is not a solution");
  ProofTuple tuple;
  tuple.params = params;
  tuple.witness = std::move(*w);
  tuple.zero_sum_claimed = multiplicities_divisible(tuple.witness, params.r);
  tuple.source = source;
  out.tuples.push_back(std::move(tuple));
}

void tuples_thm_k(TupleSet& out, const SchurParams& p) {
  const Equation eq = build_equation(p);
  const int k = p.k, r = p.r;
  add_tuple(out, p, eq, "thm-k/ones-then-two", {{1, k - 2}, {2, 1}, {1, 1}});
  add_tuple(out, p, eq, "thm-k/threes-then-twos",
            {{3, 2}, {2, k - 3}, {2, 1}});
  add_tuple(out, p, eq, "thm-k/twos-then-three-three",
            {{2, k - 3}, {3, 2}, {2, 1}});
  add_tuple(out, p, eq, "thm-k/twos-then-four", {{2, k - 2}, {4, 1}, {2, 1}});
  add_tuple(out, p, eq, "thm-k/threes-then-fours",
            {{3, k - 4}, {4, 3}, {3, 1}});
  if ((k / r) % 2 == 1) {
    const int half = (k - r) / 2;
    add_tuple(out, p, eq, "thm-k/odd-multiple-zero-sum",
              {{2, r - 1}, {1, half - 1}, {3, half + 1}, {2, 1}});
  } else {
    const int half = (k - 2 * r) / 2;
    add_tuple(out, p, eq, "thm-k/even-multiple-zero-sum",
              {{2, 2 * r - 1}, {1, half - 1}, {3, half + 1}, {2, 1}});
  }
}

void tuples_thm_2(TupleSet& out, const SchurParams& p) {
  const Equation eq = build_equation(p);
  const int k = p.k;
  const int cap = static_cast<int>(upper_thm_2(k).value);
  add_tuple(out, p, eq, "thm-2/ones-two-half", {{1, k - 2}, {2, 1}, {k / 2, 1}});
  if (k % 4 == 0) {
    // Not a solution when k == 2 (mod 4): the sides differ by one.
    add_tuple(out, p, eq, "thm-2/ones-half-cap",
              {{1, k - 2}, {k / 2, 1}, {cap, 1}});
  } else {
    out.skipped.push_back("thm-2/ones-half-cap: needs 4 | k");
  }
  add_tuple(out, p, eq, "thm-2/ones-twos-halfplus",
            {{1, k - 4}, {2, 3}, {k / 2 + 1, 1}});
  add_tuple(out, p, eq, "thm-2/ones-two-three-halfplus",
            {{1, k - 3}, {2, 1}, {3, 1}, {k / 2 + 1, 1}});
  if (k % 4 == 0) {
    const int t = k / 4;
    add_tuple(out, p, eq, "thm-2/ones-twos-capminus",
              {{1, 2 * t + 2}, {2, 2 * t - 3}, {cap - 1, 1}});
    add_tuple(out, p, eq, "thm-2/ones-even-capminus",
              {{1, 4 * t - 2}, {2 * t - 2, 1}, {cap - 1, 1}});
    add_tuple(out, p, eq, "thm-2/ones-three-even-cap",
              {{1, 4 * t - 3}, {3, 1}, {2 * t - 2, 1}, {cap, 1}});
  } else {
    const int t = (k - 2) / 4;
    add_tuple(out, p, eq, "thm-2/ones-twos-capminus",
              {{1, 2 * t + 2}, {2, 2 * t - 1}, {cap - 1, 1}});
    add_tuple(out, p, eq, "thm-2/ones-even-capminus",
              {{1, 4 * t}, {2 * t, 1}, {cap - 1, 1}});
    add_tuple(out, p, eq, "thm-2/ones-three-even-cap",
              {{1, 4 * t - 1}, {3, 1}, {2 * t, 1}, {cap, 1}});
  }
}

void tuples_thm_v_upper(TupleSet& out, const SchurParams& p) {
  const Equation eq = build_equation(p);
  const int k = p.k, v = p.v;
  add_tuple(out, p, eq, "thm-v-upper/ones-then-halves",
            {{1, k - 4 * v}, {k / 2 - 2 * v, 4 * v}});
}

void tuples_thm_general(TupleSet& out, const SchurParams& p) {
  const Equation eq = build_equation(p);
  const int k = p.k;
  const int u = u_of_k(k);

  if (u % 2 == 1) {
    if (k % 4 == 0) {
      const int a = k / 4 + (u - 1) / 2, b = k / 4 + (3 * u - 1) / 2;
      add_tuple(out, p, eq, "thm-general/odd-u-first",
                {{1, k - 3}, {a, 2}, {k / 2 - u - 2, 1}});
      add_tuple(out, p, eq, "thm-general/odd-u-second",
                {{1, k - 3}, {b, 2}, {k / 2 - 3 * u - 2, 1}});
      add_tuple(out, p, eq, "thm-general/odd-u-closer",
                {{1, k - 4},
                 {k / 2 - 3 * u - 2, 1},
                 {k / 2 - u - 2, 3}});
    } else {
      const int t = (k - 2) / 4;
      add_tuple(out, p, eq, "thm-general/odd-u-first",
                {{1, k - 3}, {2 * t - u - 2, 1}, {(2 * t + u + 1) / 2, 2}});
      add_tuple(out, p, eq, "thm-general/odd-u-second",
                {{1, k - 3},
                 {2 * t - 3 * u - 2, 1},
                 {(2 * t + 3 * u + 1) / 2, 2}});
      add_tuple(out, p, eq, "thm-general/odd-u-closer",
                {{1, 4 * t - 2},
                 {2 * t - 3 * u - 2, 1},
                 {2 * t - u - 2, 1},
                 {2 * t - u - 1, 2}});
    }
  } else {
    if (k % 4 == 0) {
      const int a = k / 4 + u / 2, b = k / 4 + 3 * u / 2;
      add_tuple(out, p, eq, "thm-general/even-u-first",
                {{1, k - 3}, {a, 2}, {k / 2 - u - 3, 1}});
      add_tuple(out, p, eq, "thm-general/even-u-second",
                {{1, k - 3}, {b, 2}, {k / 2 - 3 * u - 3, 1}});
      add_tuple(out, p, eq, "thm-general/even-u-closer",
                {{1, k - 4},
                 {k / 2 - 3 * u - 3, 1},
                 {k / 2 - u - 3, 1},
                 {k / 2 - u - 2, 2}});
    } else {
      const int t = (k - 2) / 4;
      add_tuple(out, p, eq, "thm-general/even-u-first",
                {{1, k - 3}, {2 * t - u - 1, 1}, {(2 * t + u) / 2, 2}});
      add_tuple(out, p, eq, "thm-general/even-u-second",
                {{1, k - 3}, {2 * t - 3 * u - 1, 1}, {(2 * t + 3 * u) / 2, 2}});
      add_tuple(out, p, eq, "thm-general/even-u-closer",
                {{1, 4 * t - 2}, {2 * t - 3 * u - 1, 1}, {2 * t - u - 1, 3}});
    }
  }

  // Small-k tuples the exhaustive lower-bound arguments name explicitly.
  if (k == 6)
    add_tuple(out, p, eq, "thm-general/k6-all-ones", {{1, 6}});
  if (k == 12)
    add_tuple(out, p, eq, "thm-general/k12-only-solution",
              {{1, 9}, {3, 3}});
  if (k == 14) {
    add_tuple(out, p, eq, "thm-general/k14-first", {{1, 11}, {4, 2}, {3, 1}});
    add_tuple(out, p, eq, "thm-general/k14-second",
              {{1, 10}, {2, 1}, {4, 3}});
  }
}

}  // namespace

Certificate cert_thm_k(int k, int r) {
  const FormulaValue value = value_thm_k(k, r);  // validates the hypotheses
  Certificate cert;
  cert.params = *value.params;
  if (r >= 3 && (k == r || k == 2 * r)) {
    cert.coloring = make_coloring(2, {0, 1, 0});
    cert.source = "thm-k/alternating-three";
  } else {
    cert.coloring = make_coloring(2, {0, 1});
    cert.source = "thm-k/alternating-two";
  }
  return cert;
}

Certificate cert_thm_general(int k) {
  const FormulaValue fv = value_thm_general(k);
  const int u = static_cast<int>(fv.aux.at("u"));
  const int domain = static_cast<int>(fv.value) - 1;
  Certificate cert;
  cert.params = *fv.params;

  if (k == 6) {
    // Value 1: the empty interval needs no coloring.
    cert.source = "thm-general/value-one";
    return cert;
  }
  if (k == 8 || k == 10) {
    // The equation has no solution at all in [1, value-1]; any coloring
    // certifies, the all-zero one is canonical.
    cert.coloring = block_coloring(2, domain, 0);
    cert.source = "thm-general/empty-range";
    return cert;
  }
  if (k == 12) {
    cert.coloring = make_coloring(2, {0, 0, 1});
    cert.source = "thm-general/k12";
    return cert;
  }
  if (k == 14) {
    cert.coloring = make_coloring(2, {0, 0, 1, 1});
    cert.source = "thm-general/k14";
    return cert;
  }

  // k >= 16: zeros on a prefix, ones on the rest of [1, k/2 - u - 3].
  int zeros = 0;
  if (k % 4 == 0)
    zeros = k / 4 - (u % 2 == 1 ? (u + 3) / 2 : (u + 2) / 2);
  else
    zeros = (k - 2) / 4 - (u % 2 == 1 ? (u + 3) / 2 : (u + 2) / 2);
  if (zeros < 1 || zeros >= domain)
    throw std::logic_error("block certificate threshold out of range");
  cert.coloring = block_coloring(2, zeros, domain - zeros);
  cert.source = k % 4 == 0 ? "thm-general/block-div4" : "thm-general/block-rem2";
  return cert;
}

Certificate cert_thm_more(int k, int r, int v) {
  const FormulaValue fv = value_thm_more(k, r, v);
  if (k == 2 * v * r)
    throw HypothesisError(
        "k = 2vr: the value is 1 and there is no certificate to build");
  Certificate cert;
  cert.params = *fv.params;
  cert.coloring = block_coloring(r, static_cast<int>(fv.value) - 1, 0);
  cert.source = "thm-more/range";
  return cert;
}

ProofTuple witness_thm_more(int k, int r, int v) {
  const FormulaValue fv = value_thm_more(k, r, v);
  const SchurParams params = *fv.params;
  const Equation eq = build_equation(params);

  Runs runs;
  std::string source;
  if (k == 2 * v * r) {
    runs = {{1, k}};
    source = "thm-more/balanced-all-ones";
  } else {
    const int s = static_cast<int>(fv.value);
    const int i = static_cast<int>(fv.aux.at("i"));
    runs = {{1, k - v * r}, {s, i * r}, {s - 1, (v - i) * r}};
    source = "thm-more/ones-s-sminus";
  }
  auto w = witness_from_runs(runs, nullptr);
  if (!w || !is_solution(eq, *w))
    throw std::logic_error("universal witness construction failed");
  ProofTuple tuple;
  tuple.params = params;
  tuple.witness = std::move(*w);
  tuple.zero_sum_claimed = multiplicities_divisible(tuple.witness, r);
  tuple.source = source;
  return tuple;
}

TupleSet proof_tuples(const std::string& theorem, const SchurParams& params) {
  params.validate();
  TupleSet out;
  if (theorem == "thm-k") {
    tuples_thm_k(out, params);
  } else if (theorem == "thm-2") {
    tuples_thm_2(out, params);
  } else if (theorem == "thm-v-upper") {
    tuples_thm_v_upper(out, params);
  } else if (theorem == "thm-general") {
    tuples_thm_general(out, params);
  } else if (theorem == "thm-more") {
    out.tuples.push_back(witness_thm_more(params.k, params.r, params.v));
  } else if (theorem == "trivial-km1") {
    const Equation eq = build_equation(params);
    add_tuple(out, params, eq, "trivial-km1/all-ones", {{1, params.k}});
  } else {
    throw HypothesisError("unknown theorem tag: " + theorem);
  }
  return out;
}

bool verify_certificate(const Certificate& cert) {
  cert.params.validate();
  if (!cert.coloring) return true;  // claimed value 1, nothing to refute
  cert.coloring->validate();
  for (std::uint8_t color : cert.coloring->colors)
    if (color >= cert.params.m)
      throw InvalidParams(
          "certificate coloring uses a color outside the constant's palette");
  const Equation eq = build_equation(cert.params);
  if (range_infeasible(eq, cert.coloring->t)) return true;
  return !exists_zero_sum_solution(eq, *cert.coloring, cert.params.r)
              .has_value();
}

}  // namespace zsschur
