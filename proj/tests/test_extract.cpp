#include <doctest.h>

#include "lubell/constructions.hpp"
#include "lubell/error.hpp"
#include "lubell/extract.hpp"
#include "test_util.hpp"

using namespace lubell;

namespace {

bool threshold_rejects(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind() == Errc::threshold_not_met;
  }
  return false;
}

}  // namespace

TEST_CASE("series extraction on a maximal chain") {
  SetFamily f = full_chain_family(4);  // mass 8/3 > 0 + 0 + 2
  Extractor one = chain_extractor(1);
  auto rep = extract_series(f, one, Rat(0), one, Rat(0));
  CHECK(rep.validate());
  CHECK(is_isomorphic(rep.pattern, chain(3)));

  // Trace masses obey the shallow-filter bounds and recompute exactly.
  for (const auto& step : rep.trace) {
    if (step.label == "mass(F)") CHECK(*step.value == lubell_mass(f));
    if (step.label == "mass(F1)") CHECK(*step.value <= Rat(1));
    if (step.label == "mass(F2)") CHECK(*step.value <= Rat(1));
  }

  CHECK(threshold_rejects([&] {
    extract_series(levels(4, {2}), one, Rat(0), one, Rat(0));  // mass 1 <= 2
  }));
}

TEST_CASE("series extraction composes deeper patterns") {
  SetFamily cube3 = levels(3, {0, 1, 2, 3});  // mass 4 > 1 + 0 + 2
  auto rep = extract_series(cube3, chain_extractor(2), Rat(1), chain_extractor(1), Rat(0));
  CHECK(rep.validate());
  CHECK(is_isomorphic(rep.pattern, chain(4)));

  // The extractor wrapper carries the composed pattern and threshold.
  Extractor e = series_extractor(chain_extractor(1), chain_extractor(1));
  CHECK(e.alpha == Rat(2));
  CHECK(is_isomorphic(e.pattern, chain(3)));
  auto rep2 = e.run(full_chain_family(3));
  CHECK(rep2.validate());
}

TEST_CASE("parallel extraction splits incomparable quadrants") {
  SetFamily b8 = levels(8, {0, 1, 2, 3, 4, 5, 6, 7, 8});  // mass 9 > 0 + 8
  Extractor one = chain_extractor(1);
  auto rep = extract_parallel(b8, one, one, Rat(0));
  CHECK(rep.validate());
  CHECK(is_isomorphic(rep.pattern, antichain(2)));

  // Each of the four quadrant masses of the selected pair clears mass - 8.
  Rat balanced_mass(0);
  int quadrant_terms = 0;
  for (const auto& step : rep.trace) {
    if (step.label == "mass(balanced)") balanced_mass = *step.value;
    if (step.label == "theta(i,j)") CHECK(*step.value >= Rat(4) * balanced_mass - 8);
    if (step.label.rfind("mass(R", 0) == 0) {
      CHECK(*step.value >= balanced_mass - 8);
      ++quadrant_terms;
    }
  }
  CHECK(quadrant_terms == 4);

  CHECK(threshold_rejects([&] { extract_parallel(levels(5, {2}), one, one, Rat(0)); }));

  // Nested use: (C_1 || C_1) below a point needs mass > 8 + 0 + 2.
  SetFamily b11 = levels(11, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});  // mass 12
  Extractor par = parallel_extractor(one, one);
  auto deep = extract_series(b11, par, par.alpha, chain_extractor(1), Rat(0));
  CHECK(deep.validate());
  CHECK(deep.pattern.size() == 4);
}

TEST_CASE("standard example extraction at r = 1 and r = 2") {
  SetFamily low10 = levels(10, {0, 1, 2, 3, 4, 5});  // mass 6
  auto rep1 = extract_std_example(low10, 1, Rat(1, 2), Rat(1, 2));
  CHECK(rep1.validate());
  CHECK(rep1.pattern.size() == 2);
  for (const auto& step : rep1.trace) {
    if (step.label == "chosen A") {
      REQUIRE(step.set.has_value());
      // the recorded downset mass must recompute exactly
      for (const auto& other : rep1.trace)
        if (other.label == "downset mass at A")
          CHECK(*other.value == lubell_down(low10, *step.set));
    }
  }

  SetFamily low13 = levels(13, {0, 1, 2, 3, 4, 5, 6});  // mass 7 > 4 + 2ln2 + 1
  auto rep2 = extract_std_example(low13, 2, Rat(1, 2), Rat(1, 2));
  CHECK(rep2.validate());
  CHECK(is_isomorphic(rep2.pattern, standard_example(2)));

  // The returned sets satisfy B_j in A_i exactly off the diagonal.
  std::vector<Mask> as(rep2.image.begin(), rep2.image.begin() + 2);
  std::vector<Mask> bs(rep2.image.begin() + 2, rep2.image.end());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(subset_of(bs[j], as[i]) == (i != j));

  // Member above delta*n is a precondition error, not a threshold error.
  CHECK_THROWS_AS(extract_std_example(levels(10, {6}), 1, Rat(1, 2), Rat(1, 2)), Error);
  CHECK(threshold_rejects(
      [&] { extract_std_example(levels(10, {0, 1, 2}), 2, Rat(1, 2), Rat(1, 2)); }));
}

TEST_CASE("universal extraction finds U_r or U'_r") {
  SetFamily b13 = levels(13, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});  // mass 14
  auto rep = extract_universal(b13, 1, Rat(1, 2));
  CHECK(rep.validate());
  CHECK(rep.pattern.size() == 3);
  CHECK((rep.tag == "U1" || rep.tag == "U'1"));

  CHECK(threshold_rejects([&] { extract_universal(levels(5, {2, 3}), 1, Rat(1, 2)); }));

  // A top-heavy family forces the complement-dual route and a U_r tag.
  SetFamily top_heavy = levels(14, {0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14});  // mass 13
  auto dual_rep = extract_universal(top_heavy, 1, Rat(1, 2));
  CHECK(dual_rep.validate());
  CHECK(dual_rep.tag == "U1");
  bool saw_dual_flag = false;
  for (const auto& step : dual_rep.trace)
    if (step.label == "dualized" && *step.value == Rat(1)) saw_dual_flag = true;
  CHECK(saw_dual_flag);
}

TEST_CASE("height-2 extraction composes with the universal embedding") {
  SetFamily b20 = levels(20, {0,  1,  2,  3,  4,  5,  6,  7,  8,  9, 10,
                              11, 12, 13, 14, 15, 16, 17, 18, 19, 20});  // mass 21
  auto rep = extract_height2(b20, antichain(2));
  CHECK(rep.validate());
  CHECK(rep.image.size() == 2);
  CHECK(!subset_of(rep.image[0], rep.image[1]));
  CHECK(!subset_of(rep.image[1], rep.image[0]));

  CHECK_THROWS_AS(extract_height2(b20, chain(3)), Error);
  CHECK(threshold_rejects([&] { extract_height2(levels(6, {3}), antichain(2)); }));
}

TEST_CASE("b3 reduction") {
  SetFamily chain4 = full_chain_family(4);
  SetFamily residual = b3_to_s3_reduce(chain4);
  CHECK(lubell_mass(residual) == Rat(2, 3));
  CHECK(is_p_free(residual, antichain(2)));  // still a chain

  CHECK(b3_to_s3_reduce(SetFamily::of(3, {0})).is_empty());

  // On B_3-free families the residual is S_3-free.
  auto rng = test::rng(30);
  int tested = 0;
  while (tested < 40) {
    int n = 3 + static_cast<int>(rng() % 3);
    SetFamily f = test::random_family(rng, n, 0.5);
    if (f.is_empty() || !is_p_free(f, boolean_poset(3))) continue;
    ++tested;
    SetFamily res = b3_to_s3_reduce(f);
    CHECK(is_p_free(res, standard_example(3)));
    // mass identity: interval mass minus the two removed extremes
    auto cube_mass = max_interval_members_only(f).second;
    if (res.size() + 2 == restrict_to_subcube(f, max_interval_members_only(f).first).size())
      CHECK(lubell_mass(res) == cube_mass - 2);
  }
}

TEST_CASE("antichain base extractor") {
  Extractor a3 = antichain_extractor(3);
  CHECK(a3.alpha == Rat(16, 3));
  auto rep = a3.run(levels(6, {3}));
  CHECK(rep.validate());
  CHECK(rep.image.size() == 3);
}
