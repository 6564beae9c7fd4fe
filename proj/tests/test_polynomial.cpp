#include <doctest.h>

#include "lubell/polynomial.hpp"
#include "lubell/verify.hpp"

using namespace lubell;

TEST_CASE("RatPoly arithmetic and evaluation") {
  RatPoly p(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});  // 1 - x^2
  RatPoly q(std::vector<Rat>{Rat(0), Rat(1)});           // x
  CHECK((p * q).coeff(3) == Rat(-1));
  CHECK(p.eval(Rat(2)) == Rat(-3));
  CHECK(p.derivative() == RatPoly(std::vector<Rat>{Rat(0), Rat(-2)}));
  CHECK((p - p).degree() == -1);
  Interval v = p.eval(Interval::from_rat(Rat(1, 2)));
  CHECK(!v.rat_above(Rat(3, 4)));
  CHECK(!v.rat_below(Rat(3, 4)));
}

TEST_CASE("Sturm counting and root isolation") {
  RatPoly p(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});  // x^2 - 2
  CHECK(count_roots(p, Rat(0), Rat(2)) == 1);
  CHECK(count_roots(p, Rat(-2), Rat(2)) == 2);
  CHECK(count_roots(p, Rat(2), Rat(3)) == 0);

  auto roots = isolate_roots(p, Rat(0), Rat(2));
  REQUIRE(roots.size() == 1);
  auto [lo, hi] = refine_root(p, roots[0].first, roots[0].second, Rat(1, 1000000000000L));
  CHECK(hi - lo <= Rat(1, 1000000000000L));
  CHECK(lo * lo <= Rat(2));
  CHECK(hi * hi >= Rat(2));

  // (x-1)^2 (x+2): multiple root handled through the square-free part.
  RatPoly m = RatPoly(std::vector<Rat>{Rat(-1), Rat(1)}) *
              RatPoly(std::vector<Rat>{Rat(-1), Rat(1)}) *
              RatPoly(std::vector<Rat>{Rat(2), Rat(1)});
  CHECK(count_roots(m, Rat(0), Rat(2)) == 1);
  CHECK(count_roots(m, Rat(-3), Rat(2)) == 2);
}

TEST_CASE("Poly2 algebra and line substitution") {
  Poly2 x = Poly2::var(0), y = Poly2::var(1);
  Poly2 p = x * x + (x * y).scaled(Rat(3)) - Poly2::constant(Rat(2));
  CHECK(p.eval(Rat(1), Rat(2)) == Rat(5));
  CHECK(p.partial(0) == (x.scaled(Rat(2)) + y.scaled(Rat(3))));
  RatPoly diag = p.on_line(Rat(1), Rat(0), Rat(1), Rat(0));  // x = y = t
  CHECK(diag == RatPoly(std::vector<Rat>{Rat(-2), Rat(0), Rat(4)}));
}

TEST_CASE("envelope polynomial endpoints") {
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 4; ++j) {
      CHECK(envelope_value(i, j, Rat(1)) == Rat(0));
      CHECK(envelope_value(i, j, Rat(0)) == (i >= 2 ? Rat(0) : Rat(1)));
    }
  // env(2,6) = 2x - x^2 - x^6
  RatPoly e = envelope(2, 6);
  CHECK(e.coeff(1) == Rat(2));
  CHECK(e.coeff(2) == Rat(-1));
  CHECK(e.coeff(6) == Rat(-1));
}
