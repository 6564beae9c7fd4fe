#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lubell {

// All Lubell quantities are exact rationals; floating point is confined to the
// certified-interval layer and to display.
using Int = mpz_class;
using Rat = mpq_class;

// binom(n, k), cached per row; 0 when k < 0 or k > n.
const Int& binom(unsigned n, long k);

// 1 / binom(n, k); k must lie in [0, n].
Rat binom_inv(unsigned n, unsigned k);

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

std::string rat_str(const Rat& q);       // "p/q" (or "p" when integral)
std::string rat_decimal(const Rat& q, int digits = 12);
double rat_double(const Rat& q);

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Exact ceiling of a rational.
Int rat_ceil(const Rat& q);

}  // namespace lubell
