#pragma once

#include <mpfr.h>

#include <string>

#include "lubell/rational.hpp"

namespace lubell {

// Outward-rounded interval arithmetic over MPFR, used wherever an inequality
// involves a transcendental constant (ln 2, √10, e, ...).  A claim "x < y" is
// reported verified only when x.hi < y.lo, so every verdict is a statement
// about the enclosed reals.  Default precision: 128 bits.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;

  Interval();
  explicit Interval(long v, mpfr_prec_t prec = kDefaultPrec);
  Interval(const Interval&);
  Interval(Interval&&) noexcept;
  Interval& operator=(const Interval&);
  Interval& operator=(Interval&&) noexcept;
  ~Interval();

  static Interval from_rat(const Rat& q, mpfr_prec_t prec = kDefaultPrec);
  static Interval hull(const Rat& lo, const Rat& hi, mpfr_prec_t prec = kDefaultPrec);
  static Interval log2_const(mpfr_prec_t prec = kDefaultPrec);  // ln 2
  static Interval euler_e(mpfr_prec_t prec = kDefaultPrec);     // e = exp(1)

  mpfr_prec_t prec() const { return prec_; }

  Interval operator+(const Interval&) const;
  Interval operator-(const Interval&) const;
  Interval operator*(const Interval&) const;
  Interval operator/(const Interval&) const;  // denominator must not straddle 0
  Interval operator-() const;

  Interval sqrt() const;  // requires lo ≥ 0
  Interval log() const;   // requires lo > 0
  Interval exp() const;
  Interval abs() const;

  // Certified comparisons: true only when the relation provably holds.
  bool surely_lt(const Interval& o) const;
  bool surely_le(const Interval& o) const;
  bool surely_positive() const;
  bool surely_nonnegative() const;

  bool contains_zero() const;

  // Exact comparisons against rationals (MPFR compares exactly).
  bool rat_above(const Rat& q) const;     // q > hi: q exceeds every enclosed value
  bool rat_below(const Rat& q) const;     // q < lo: q is below every enclosed value
  bool certainly_ge(const Rat& q) const;  // lo >= q: every enclosed value is >= q

  double lo_d() const;
  double hi_d() const;
  double mid_d() const;
  std::string str(int digits = 15) const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

 private:
  explicit Interval(mpfr_prec_t prec, int /*tag*/);
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

inline Interval operator+(long a, const Interval& b) { return Interval(a, b.prec()) + b; }
inline Interval operator*(long a, const Interval& b) { return Interval(a, b.prec()) * b; }
inline Interval operator-(long a, const Interval& b) { return Interval(a, b.prec()) - b; }

}  // namespace lubell
