#include <doctest.h>

#include "lubell/constructions.hpp"
#include "lubell/error.hpp"
#include "lubell/verify.hpp"
#include "test_util.hpp"

using namespace lubell;

TEST_CASE("levels") {
  CHECK(levels(4, {2}).size() == 6);
  CHECK(lubell_mass(levels(5, {2, 3})) == Rat(2));
  CHECK(levels(3, {0, 3}).size() == 2);
  CHECK_THROWS_AS(levels(3, {4}), Error);
}

TEST_CASE("contiguous levels avoid the standard example") {
  // The largest r-2 contiguous levels are S_r-free.
  for (int r = 3; r <= 4; ++r)
    for (int n = 2; n <= 5; ++n) {
      std::vector<int> ks;
      int lo = (n - (r - 2) + 1) / 2;
      for (int k = lo; k < lo + r - 2 && k <= n; ++k) ks.push_back(k);
      CHECK(is_p_free(levels(n, ks), standard_example(r)));
    }
}

TEST_CASE("full chain family") {
  CHECK(lubell_mass(full_chain_family(3)) == Rat(8, 3));
  CHECK(lubell_mass(full_chain_family(4)) == Rat(8, 3));
  for (int n = 0; n <= 8; ++n) {
    CHECK(lubell_mass(full_chain_family(n)) == a_sequence(n));
    CHECK(is_p_free(full_chain_family(n), boolean_poset(2)));
  }
}

TEST_CASE("priv_sharp") {
  CHECK(lubell_mass(priv_sharp(5, 3)) == Rat(3));
  CHECK(priv_sharp(7, 1) == SetFamily::of(7, {0}));
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= n + 1; ++r) {
      SetFamily f = priv_sharp(n, r);
      CHECK(lubell_mass(f) == Rat(r));
      Int expect(1);
      for (int k = n - r + 2; k <= n; ++k) expect += binom(n, k);
      CHECK(Int(static_cast<long>(f.size())) == expect);
      CHECK(!private_system(f, r).has_value());
    }
  CHECK_THROWS_AS(priv_sharp(4, 6), Error);
}

TEST_CASE("vc_extremal") {
  // t = 1 degenerates to the classical extremal family of VC dimension d-1.
  auto classical = vc_extremal(8, 3, 1);
  CHECK(classical.family == levels(8, {0, 1, 2}));
  CHECK(vc_dimension(classical.family) == 2);

  auto built = vc_extremal(12, 4, 2);
  CHECK(built.parts.size() == 2);
  CHECK(popcount(built.parts[0]) == 6);
  CHECK(vc_dimension(built.family) < 4);
  Rat mass = lubell_mass(built.family);
  CHECK(mass >= Rat(2));  // the top-levels part alone
  CHECK(mass < Rat(8));

  // No d-set is shattered (exhaustive).
  CHECK(!find_shattered(built.family, 4).has_value());

  // The small-trace part carries at least one unit of mass per full level
  // below d/t (levels 0 and 1 here).
  std::vector<Mask> h_members;
  for (Mask m : built.family.members()) {
    bool in_h = true;
    for (Mask z : built.parts) in_h = in_h && 2 * popcount(m & z) < 4;
    if (in_h) h_members.push_back(m);
  }
  CHECK(lubell_mass(SetFamily::of(12, h_members)) >= Rat(2));
}

TEST_CASE("b2_lower matches its closed form and stays diamond-free") {
  for (int n = 1; n <= 10; ++n)
    for (int s = 0; s <= n; ++s)
      for (int t = 0; s + t <= n; ++t) {
        PartitionSpec part{s, t, n - s - t};
        CHECK(lubell_mass(b2_lower(n, part)) == b2_lower_closed_form(n, part));
      }

  CHECK(lubell_mass(b2_lower(6, {6, 0, 0})) == Rat(2));
  CHECK(is_p_free(b2_lower(9, {2, 5, 2}), boolean_poset(2)));
  CHECK(is_p_free(b2_lower(10, {3, 4, 3}), boolean_poset(2)));
  CHECK_THROWS_AS(b2_lower(5, {1, 1, 1}), Error);
}

TEST_CASE("normalized b2_lower mass approaches the simplex polynomial") {
  // deviation at n = 300 with x = (0.24, 0.52, 0.24) stays below 10/n
  int n = 300;
  PartitionSpec part{72, 156, 72};
  Rat exact = b2_lower_closed_form(n, part);
  Rat poly = b2_lower_poly(Rat(72, 300), Rat(156, 300), Rat(72, 300));
  Rat dev = exact - poly;
  if (dev < 0) dev = -dev;
  CHECK(dev < Rat(10, n));
}
