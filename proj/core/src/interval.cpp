#include "lubell/interval.hpp"

#include <algorithm>
#include <cstdio>

#include "lubell/error.hpp"

namespace lubell {

Interval::Interval(mpfr_prec_t prec, int) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval() : Interval(kDefaultPrec, 0) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, mpfr_prec_t prec) : Interval(prec, 0) {
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval(o.prec_, 0) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rat(const Rat& q, mpfr_prec_t prec) {
  Interval r(prec, 0);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
  if (lo > hi) fail(Errc::precondition, "interval hull needs lo <= hi");
  Interval r(prec, 0);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::log2_const(mpfr_prec_t prec) {
  Interval r(prec, 0);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler_e(mpfr_prec_t prec) { return Interval(1, prec).exp(); }

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_), 0);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_), 0);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_), 0);
  mpfr_t c[4];
  for (auto& x : c) mpfr_init2(x, r.prec_ + 4);
  mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
  mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
  mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
  mpfr_set(r.lo_, c[0], MPFR_RNDD);
  for (int i = 1; i < 4; ++i)
    if (mpfr_cmp(c[i], r.lo_) < 0) mpfr_set(r.lo_, c[i], MPFR_RNDD);
  mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDU);
  mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDU);
  mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDU);
  mpfr_set(r.hi_, c[0], MPFR_RNDU);
  for (int i = 1; i < 4; ++i)
    if (mpfr_cmp(c[i], r.hi_) > 0) mpfr_set(r.hi_, c[i], MPFR_RNDU);
  for (auto& x : c) mpfr_clear(x);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) fail(Errc::precondition, "interval division by a range containing 0");
  Interval inv(o.prec_, 0);
  // 1/[a,b] with 0 outside: endpoints are 1/b (down) and 1/a (up).
  mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
  return *this * inv;
}

Interval Interval::operator-() const {
  Interval r(prec_, 0);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) fail(Errc::precondition, "interval sqrt of a possibly negative range");
  Interval r(prec_, 0);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) fail(Errc::precondition, "interval log of a possibly nonpositive range");
  Interval r(prec_, 0);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_, 0);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  if (surely_nonnegative()) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  Interval r(prec_, 0);
  mpfr_set_zero(r.lo_, 1);
  mpfr_t na;
  mpfr_init2(na, prec_);
  mpfr_neg(na, lo_, MPFR_RNDU);
  if (mpfr_cmp(na, hi_) > 0)
    mpfr_set(r.hi_, na, MPFR_RNDU);
  else
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  mpfr_clear(na);
  return r;
}

bool Interval::surely_lt(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool Interval::surely_le(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
bool Interval::surely_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::surely_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::rat_above(const Rat& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }
bool Interval::rat_below(const Rat& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }
bool Interval::certainly_ge(const Rat& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0; }

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_d() const { return 0.5 * (lo_d() + hi_d()); }

std::string Interval::str(int digits) const {
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "[%.*Rg, %.*Rg]", digits, lo_, digits, hi_);
  return buf;
}

}  // namespace lubell
