#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zsschur/coloring.hpp"
#include "zsschur/equation.hpp"
#include "zsschur/params.hpp"

namespace zsschur {

inline constexpr const char* kNoZeroSumClaim = "no-zero-sum-solution";

/// A lower-bound certificate: a coloring of [1, value-1] under which the
/// equation has no r-zero-sum solution. The coloring is absent when the
/// claimed value is 1 (there is nothing to color).
struct Certificate {
  SchurParams params;
  std::optional<Coloring> coloring;
  std::string claim = kNoZeroSumClaim;
  std::string source;
};

/// One explicit solution tuple used by a constructive argument.
/// zero_sum_claimed is set when the tuple's color sum vanishes mod r under
/// EVERY coloring, i.e. when each distinct value occurs a multiple of r
/// times.
struct ProofTuple {
  SchurParams params;
  Witness witness;
  bool zero_sum_claimed = false;
  std::string source;
};

struct TupleSet {
  std::vector<ProofTuple> tuples;
  // One line per construction that is not instantiable at these parameters
  // (negative repetition count or non-positive entry value).
  std::vector<std::string> skipped;
};

// Certificate of value >= 3 (or >= 4 in the k in {r, 2r} branch) for the
// ell = k family: the two- or three-element alternating coloring.
Certificate cert_thm_k(int k, int r);

// Certificate of the exact value for ell = 1, r = m = 2, eps = 1, v = 1.
// k in {6, 8, 10} have no (or an empty-range) coloring argument; k in
// {12, 14} use ad hoc colorings; k >= 16 uses a 0-prefix/1-suffix block
// coloring whose threshold depends on u's parity and k mod 4.
Certificate cert_thm_general(int k);

// All-zero coloring of [1, value-1] for the ell = 1, eps = 0, m = r family;
// the claim is discharged by range infeasibility, not coloring structure.
// Throws HypothesisError when k == 2vr (the value is 1, nothing to certify).
Certificate cert_thm_more(int k, int r, int v);

// The universal witness for the ell = 1, eps = 0, m = r family:
// k - vr ones, then i*r copies of s, then (v-i)*r copies of s-1, where
// s is the exact value and k - 2vr = v*r*t + i*r. Its color sum vanishes
// under every coloring because each multiplicity is a multiple of r.
ProofTuple witness_thm_more(int k, int r, int v);

// Every explicit solution tuple the named closed-form argument uses,
// instantiated at the given parameters. Tags: thm-k, thm-2, thm-v-upper,
// thm-general, thm-more, trivial-km1.
TupleSet proof_tuples(const std::string& theorem, const SchurParams& params);

// True iff the certificate's coloring admits no r-zero-sum solution
// (range infeasibility is checked first, then the exact search).
// A certificate without a coloring claims value 1 and verifies trivially.
bool verify_certificate(const Certificate& cert);

}  // namespace zsschur
