#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lubell/interval.hpp"
#include "lubell/polynomial.hpp"
#include "lubell/rational.hpp"

namespace lubell {

/// One verified (or refuted) numeric claim.
struct ConstantReport {
  std::string name;
  std::string claimed;
  std::string computed;
  std::string tolerance;
  bool match = false;
  std::string note;
};

// a_n = sum over k of 1/binom(n, k).
Rat a_sequence(int n);

// a_0 <= ... <= a_3 = a_4 >= a_5 >= ... >= a_N with maximum 8/3, exactly.
ConstantReport a_unimodality_check(int N);

// max over 1 <= k <= N of a_k - 1/k equals 29/12, attained at k = 4.
ConstantReport ak_minus_inverse_max(int N);

// 1 + x1 + 2x1x2 + 6x1x2x3 + x2^2 + 3x2^2x3 + 3x2x3^2 + x3^2.
Rat b2_lower_poly(const Rat& x1, const Rat& x2, const Rat& x3);

struct SimplexMax {
  Interval value;
  Interval x1, x2;  // x3 = x1 by the symmetry of the optimum
  ConstantReport report;
};
// Certified maximization over the simplex via the exact stationarity system.
SimplexMax maximize_b2_lower();

// 29/12 + x/6 + 5x^2/12 - x^3/3 - x^4/15 - x^5/12 - 11x^6/140 - 3x^7/140.
RatPoly b2_upper_polynomial();

// i*x^(i-1) - (i-1)*x^i - x^j, the chain-event envelope; requires 1 <= i <= j.
RatPoly envelope(int i, int j);
Rat envelope_value(int i, int j, const Rat& x);

struct LineMax {
  Interval value;
  Interval arg;
  ConstantReport report;
};
// Certified maximization of the upper-bound polynomial on [0, 1].
LineMax maximize_b2_upper();

// The upper polynomial equals the envelope recombination exactly,
// coefficient by coefficient.
ConstantReport b2_upper_recombination_check();

// Exact Pr[|random subset of [n]| >= m] and the Azuma bound exp(-t^2/2n),
// t = m - n/2.
std::pair<Rat, Interval> azuma_subset_tail(int n, int m);
ConstantReport azuma_tail_sweep(int max_n);
// Sum of binom(n,k) over k >= ceil(n/2 + sqrt(2 n ln n)) is at most 2^n/n.
ConstantReport tail_cardinality_check(int n_lo, int n_hi);

// Exact hypergeometric tail Pr[|A ∩ U| >= (1+delta) * (u/n) * k] for a
// uniform k-set, against exp(-(delta*u/n)^2 k / 2).
std::pair<Rat, Interval> hypergeometric_tail_vs_ci(int n, int u, int k, const Rat& delta);
ConstantReport hypergeometric_suite();

// The three "some algebra shows" threshold inequalities, certified pointwise
// over r up to rmax (the third from r = 2).
std::vector<ConstantReport> threshold_algebra_suite(int rmax = 10000);

// Exact mass of the VC-extremal family against the proof's lower envelope
// (the envelope may be vacuous at small scale; it is reported, not asserted).
ConstantReport vc_mass_asymptote(int d, int t, int n);

// Per-set quadrant contribution identity: 4*binom(n,2)/binom(n,k) in the
// middle, 3*binom(n,2)/binom(n,1) at k in {1, n-1}, binom(n,2) at the ends.
ConstantReport theta_identity_check(int max_n);

// sqrt(ln 2) = 0.8325546...; the source text rounds it to 0.833.
ConstantReport sqrt_ln2_report();

// which: "constants", "inequalities", "thresholds", or "all".
std::vector<ConstantReport> verify_suite(const std::string& which);

}  // namespace lubell
