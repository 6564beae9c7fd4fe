#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lubell/interval.hpp"
#include "lubell/rational.hpp"

namespace lubell {

/// Dense univariate polynomial with exact rational coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);  // coeffs[i] multiplies x^i
  static RatPoly monomial(const Rat& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  RatPoly operator+(const RatPoly&) const;
  RatPoly operator-(const RatPoly&) const;
  RatPoly operator*(const RatPoly&) const;
  RatPoly scaled(const Rat& c) const;
  RatPoly derivative() const;
  bool operator==(const RatPoly&) const = default;

  Rat eval(const Rat& x) const;
  Interval eval(const Interval& x) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Number of distinct real roots in the open interval (a, b); requires
// nonzero values at both endpoints.
int count_roots(const RatPoly& p, const Rat& a, const Rat& b);

// Disjoint isolating intervals (lo, hi) for every distinct root in (a, b),
// in increasing order; endpoints are never roots.
std::vector<std::pair<Rat, Rat>> isolate_roots(const RatPoly& p, Rat a, Rat b);

// Bisects an isolating interval until hi - lo <= width.
std::pair<Rat, Rat> refine_root(const RatPoly& p, Rat lo, Rat hi, const Rat& width);

/// Sparse bivariate polynomial, used to set up stationarity systems before
/// reducing them to univariate root isolation.
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 constant(const Rat& c);
  static Poly2 var(int which);  // 0 -> x, 1 -> y

  Poly2 operator+(const Poly2&) const;
  Poly2 operator-(const Poly2&) const;
  Poly2 operator*(const Poly2&) const;
  Poly2 scaled(const Rat& c) const;
  Poly2 partial(int which) const;
  bool operator==(const Poly2&) const = default;

  bool is_zero() const { return t_.empty(); }

  // Substitute x = ax*s + bx, y = ay*s + by; returns a univariate in s.
  RatPoly on_line(const Rat& ax, const Rat& bx, const Rat& ay, const Rat& by) const;

  Rat eval(const Rat& x, const Rat& y) const;

 private:
  void insert(int i, int j, const Rat& c);
  std::map<std::pair<int, int>, Rat> t_;  // (deg_x, deg_y) -> coefficient
};

}  // namespace lubell
