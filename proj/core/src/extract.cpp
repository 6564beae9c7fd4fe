#include "lubell/extract.hpp"

#include <algorithm>

#include "lubell/error.hpp"
#include "lubell/interval.hpp"

namespace lubell {

namespace {

SetFamily family_without(const SetFamily& f, Mask out) {
  std::vector<Mask> ms;
  ms.reserve(f.size());
  for (Mask m : f.members())
    if (m != out) ms.push_back(m);
  return SetFamily::of(f.ground(), std::move(ms));
}

Mask lift_from_subcube(Mask x, Subcube cube) {
  return unpack_bits(x, cube.top & ~cube.bottom) | cube.bottom;
}

// Down-mass by whichever of subset enumeration and a member scan is cheaper.
Rat down_mass(const SetFamily& f, Mask a) {
  int k = popcount(a);
  if (k <= 24 && (std::size_t{1} << k) < 2 * f.size()) {
    std::vector<long> counts(k + 1, 0);
    for_each_subset(a, [&](Mask s) {
      if (f.contains(s)) ++counts[popcount(s)];
    });
    Rat total(0);
    for (int j = 0; j <= k; ++j)
      if (counts[j]) total += Rat(counts[j]) * binom_inv(k, j);
    return total;
  }
  return lubell_down(f, a);
}

void check_unit_interval(const Rat& x, const char* name) {
  if (!(x > 0 && x < 1))
    fail(Errc::precondition, std::string(name) + " must lie strictly between 0 and 1");
}

void append_child_trace(ExtractionReport& rep, const std::string& prefix,
                        const ExtractionReport& child) {
  for (const auto& step : child.trace)
    rep.trace.push_back({prefix + step.label, step.value, step.set});
}

Rat dyadic_mid(const Interval& g, int bits = 32) {
  mpfr_t m;
  mpfr_init2(m, g.prec());
  mpfr_add(m, g.lo(), g.hi(), MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpfr_mul_2ui(m, m, bits, MPFR_RNDN);
  Int z;
  mpfr_get_z(z.get_mpz_t(), m, MPFR_RNDD);
  mpfr_clear(m);
  Rat q(z, Int(1) << bits);
  q.canonicalize();
  return q;
}

}  // namespace

Extractor empty_extractor() {
  return {antichain(0), Rat(0),
          [](const SetFamily&) { return ExtractionReport{antichain(0), {}, {}, "empty"}; }};
}

Extractor chain_extractor(int r) {
  Poset pat = chain(r);
  return {pat, Rat(r - 1), [r, pat](const SetFamily& g) {
            auto emb = find_copy(g, pat);
            if (!emb) fail(Errc::proof_step, "no r-chain although the mass bound guarantees one");
            ExtractionReport rep{pat, {}, {}, "C" + std::to_string(r)};
            for (int idx : emb->map) rep.image.push_back(g.member(idx));
            rep.trace.push_back({"mass", lubell_mass(g), std::nullopt});
            return rep;
          }};
}

Extractor antichain_extractor(int r) {
  Poset pat = antichain(r);
  return {pat, Rat(8 * (r - 1), 3), [r, pat](const SetFamily& g) {
            auto emb = find_copy(g, pat);
            if (!emb)
              fail(Errc::proof_step, "no r-antichain although the mass bound guarantees one");
            ExtractionReport rep{pat, {}, {}, "A" + std::to_string(r)};
            for (int idx : emb->map) rep.image.push_back(g.member(idx));
            rep.trace.push_back({"mass", lubell_mass(g), std::nullopt});
            return rep;
          }};
}

Extractor series_extractor(const Extractor& low, const Extractor& high) {
  Extractor e;
  e.pattern = compose_series_middle(low.pattern, high.pattern);
  e.alpha = low.alpha + high.alpha + 2;
  e.run = [low, high](const SetFamily& g) {
    return extract_series(g, low, low.alpha, high, high.alpha);
  };
  return e;
}

Extractor parallel_extractor(const Extractor& left, const Extractor& right) {
  Extractor e;
  e.pattern = compose_parallel(left.pattern, right.pattern);
  e.alpha = std::max(left.alpha, right.alpha) + 8;
  e.run = [left, right, alpha = std::max(left.alpha, right.alpha)](const SetFamily& g) {
    return extract_parallel(g, left, right, alpha);
  };
  return e;
}

ExtractionReport extract_series(const SetFamily& f, const Extractor& low, const Rat& alpha1,
                                const Extractor& high, const Rat& alpha2) {
  Rat mass = lubell_mass(f);
  if (!(mass > alpha1 + alpha2 + 2))
    fail(Errc::threshold_not_met, "series extraction requires mass > alpha1 + alpha2 + 2");

  int n = f.ground();
  Rat mass_f1(0), mass_f2(0);
  Mask chosen = 0;
  bool found = false;
  for (Mask m : f.members()) {
    bool in1 = lubell_down(f, m) <= alpha1 + 1;
    bool in2 = lubell_up(f, m) <= alpha2 + 1;
    if (in1) mass_f1 += binom_inv(n, popcount(m));
    if (in2) mass_f2 += binom_inv(n, popcount(m));
    if (!in1 && !in2 && !found) {
      chosen = m;
      found = true;
    }
  }
  if (!found) fail(Errc::proof_step, "both shallow filters covered the family");

  Subcube downc{0, chosen}, upc{chosen, f.full()};
  SetFamily g1 = family_without(restrict_to_subcube(f, downc), full_mask(popcount(chosen)));
  SetFamily g2 = family_without(restrict_to_subcube(f, upc), 0);

  ExtractionReport low_rep = low.run(g1);
  ExtractionReport high_rep = high.run(g2);

  ExtractionReport rep;
  rep.pattern = compose_series_middle(low.pattern, high.pattern);
  for (Mask x : low_rep.image) rep.image.push_back(lift_from_subcube(x, downc));
  rep.image.push_back(chosen);
  for (Mask x : high_rep.image) rep.image.push_back(lift_from_subcube(x, upc));
  rep.tag = "series";
  rep.trace.push_back({"mass(F)", mass, std::nullopt});
  rep.trace.push_back({"mass(F1)", mass_f1, std::nullopt});
  rep.trace.push_back({"mass(F2)", mass_f2, std::nullopt});
  rep.trace.push_back({"middle u", std::nullopt, chosen});
  append_child_trace(rep, "low: ", low_rep);
  append_child_trace(rep, "high: ", high_rep);
  if (!rep.validate()) fail(Errc::proof_step, "series witness failed validation");
  return rep;
}

ExtractionReport extract_parallel(const SetFamily& f, const Extractor& left,
                                  const Extractor& right, const Rat& alpha) {
  Rat mass = lubell_mass(f);
  if (!(mass > alpha + 8))
    fail(Errc::threshold_not_met, "parallel extraction requires mass > alpha + 8");

  auto [cube, cube_mass] = max_interval(f);
  SetFamily fb = restrict_to_subcube(f, cube);
  Rat bmass = lubell_mass(fb);
  int n2 = fb.ground();
  if (n2 < 2) fail(Errc::proof_step, "balanced family lives in a degenerate cube");

  Rat target = Rat(4) * bmass - 8;
  int pi = -1, pj = -1;
  Rat theta(0);
  for (int i = 0; i < n2 && pi < 0; ++i)
    for (int j = i + 1; j < n2; ++j) {
      Rat t = theta_pair(fb, i, j);
      if (t >= target) {
        pi = i;
        pj = j;
        theta = t;
        break;
      }
    }
  if (pi < 0) fail(Errc::proof_step, "no coordinate pair reaches the average theta");

  Subcube qi = quadrant_cube(n2, pi, pj, Quadrant::first_only);
  Subcube qj = quadrant_cube(n2, pi, pj, Quadrant::second_only);
  SetFamily g1 = restrict_to_subcube(fb, qi);
  SetFamily g2 = restrict_to_subcube(fb, qj);

  ExtractionReport left_rep = left.run(g1);
  ExtractionReport right_rep = right.run(g2);

  ExtractionReport rep;
  rep.pattern = compose_parallel(left.pattern, right.pattern);
  for (Mask x : left_rep.image)
    rep.image.push_back(lift_from_subcube(lift_from_subcube(x, qi), cube));
  for (Mask x : right_rep.image)
    rep.image.push_back(lift_from_subcube(lift_from_subcube(x, qj), cube));
  rep.tag = "parallel";
  rep.trace.push_back({"mass(F)", mass, std::nullopt});
  rep.trace.push_back({"interval bottom", std::nullopt, cube.bottom});
  rep.trace.push_back({"interval top", std::nullopt, cube.top});
  rep.trace.push_back({"mass(balanced)", bmass, std::nullopt});
  rep.trace.push_back({"pair", std::nullopt, (Mask{1} << pi) | (Mask{1} << pj)});
  rep.trace.push_back({"theta(i,j)", theta, std::nullopt});
  rep.trace.push_back({"mass(R_ij)",
                       lubell_on_interval(fb, quadrant_cube(n2, pi, pj, Quadrant::both)),
                       std::nullopt});
  rep.trace.push_back({"mass(R_i^j)", lubell_mass(g1), std::nullopt});
  rep.trace.push_back({"mass(R_j^i)", lubell_mass(g2), std::nullopt});
  rep.trace.push_back({"mass(R^ij)",
                       lubell_on_interval(fb, quadrant_cube(n2, pi, pj, Quadrant::neither)),
                       std::nullopt});
  append_child_trace(rep, "left: ", left_rep);
  append_child_trace(rep, "right: ", right_rep);
  if (!rep.validate()) fail(Errc::proof_step, "parallel witness failed validation");
  return rep;
}

namespace {

// Canonical-least member A with down-mass above `deep` that is gamma-flexible;
// scanning in canonical order makes the choice the canonical minimum of the
// survivor set.
std::optional<Mask> survivor_scan(const SetFamily& w, const Rat& deep, const Rat& gamma) {
  for (Mask m : w.members()) {
    if (!(down_mass(w, m) > deep)) continue;
    if (!is_gamma_flexible(w, m, gamma)) continue;
    return m;
  }
  return std::nullopt;
}

// Smallest member C ⊆ a of w whose T-trace equals `want`; the downset `d` is
// the packed restriction of w to [∅, a], scanned in canonical order.
std::optional<Mask> lift_by_trace(const SetFamily& d, Mask a, Mask t, Mask want) {
  for (Mask packed : d.members()) {
    Mask c = unpack_bits(packed, a);
    if ((c & t) == want) return c;
  }
  return std::nullopt;
}

// Swap witnesses A_i = (a - {i}) ∪ {j}, smallest j outside a first.
std::optional<Mask> swap_witness(const SetFamily& w, Mask a, Mask i) {
  for (Mask out = w.full() & ~a; out;) {
    Mask j = out & -out;
    out ^= j;
    Mask cand = (a ^ i) | j;
    if (w.contains(cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace

ExtractionReport extract_std_example(const SetFamily& f, int r, const Rat& gamma,
                                     const Rat& delta) {
  if (r < 1) fail(Errc::precondition, "standard-example extraction requires r >= 1");
  check_unit_interval(gamma, "gamma");
  check_unit_interval(delta, "delta");
  int n = f.ground();
  for (Mask m : f.members())
    if (Rat(popcount(m)) > delta * Rat(n))
      fail(Errc::precondition, "a member exceeds delta * n elements");

  Rat mass = lubell_mass(f);
  Interval rhs = Interval::from_rat(Rat(r) / gamma) +
                 Interval::from_rat(Rat(1) / (Rat(1) - gamma)) *
                     Interval::from_rat(Rat(1) / (Rat(1) - delta)).log() +
                 Interval(1);
  if (!rhs.rat_above(mass))
    fail(Errc::threshold_not_met,
         "standard-example extraction requires mass > r/gamma + ln(1/(1-delta))/(1-gamma) + 1");

  Rat deep = Rat(r) / gamma;
  auto survivor = survivor_scan(f, deep, gamma);
  if (!survivor) fail(Errc::proof_step, "no flexible deep member survived the filters");
  Mask a = *survivor;
  Mask t = pivots(f, a);

  SetFamily d = restrict_to_subcube(f, {0, a});
  Mask t_packed = pack_bits(t, a);
  SetFamily proj = projection(d, t_packed);
  Rat proj_mass = lubell_mass(proj);

  auto sys = private_system(proj, r);
  if (!sys) fail(Errc::proof_step, "projection mass exceeds r but no private system was found");

  auto lift2 = [&](Mask x) { return unpack_bits(unpack_bits(x, t_packed), a); };
  Mask r_orig = lift2(sys->r_set);

  std::vector<Mask> bs;
  for (Mask w : sys->witnesses) {
    auto b = lift_by_trace(d, a, t, lift2(w));
    if (!b) fail(Errc::proof_step, "projected witness failed to lift");
    bs.push_back(*b);
  }
  std::vector<Mask> as;
  for (Mask rest = r_orig; rest;) {
    Mask i = rest & -rest;
    rest ^= i;
    auto cand = swap_witness(f, a, i);
    if (!cand) fail(Errc::proof_step, "pivot lost its swap partner");
    as.push_back(*cand);
  }

  ExtractionReport rep;
  rep.pattern = standard_example(r);
  rep.image = as;
  rep.image.insert(rep.image.end(), bs.begin(), bs.end());
  rep.tag = "S" + std::to_string(r);
  rep.trace.push_back({"mass(F)", mass, std::nullopt});
  rep.trace.push_back({"chosen A", std::nullopt, a});
  rep.trace.push_back({"downset mass at A", down_mass(f, a), std::nullopt});
  rep.trace.push_back({"pivot set T", std::nullopt, t});
  rep.trace.push_back({"projection mass", proj_mass, std::nullopt});
  rep.trace.push_back({"private R", std::nullopt, r_orig});
  if (!rep.validate()) fail(Errc::proof_step, "standard-example witness failed validation");
  return rep;
}

namespace {

// Pick one projection member per R-trace so that the picks form an antichain.
// Backtracking over canonical candidate order with a node budget.
struct TracePicker {
  const std::vector<std::vector<Mask>>& cand;
  std::vector<Mask> chosen;
  long nodes = 0, node_cap = 500000;

  bool pick(std::size_t s) {
    if (s == cand.size()) return true;
    for (Mask c : cand[s]) {
      if (++nodes > node_cap) return false;
      bool ok = true;
      for (Mask prev : chosen)
        if (subset_of(prev, c) || subset_of(c, prev)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      if (pick(s + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

Mask next_comb(Mask v) {
  Mask c = v & -v, r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

ExtractionReport extract_universal(const SetFamily& f, int r, const Rat& gamma) {
  if (r < 1) fail(Errc::precondition, "universal extraction requires r >= 1");
  check_unit_interval(gamma, "gamma");
  Rat mass = lubell_mass(f);
  Interval rhs = Interval::from_rat(Rat(4 * r) / gamma) +
                 Interval::from_rat(Rat(2) / (Rat(1) - gamma)) * Interval::log2_const() +
                 Interval(2);
  if (!rhs.rat_above(mass))
    fail(Errc::threshold_not_met,
         "universal extraction requires mass > 4r/gamma + 2ln2/(1-gamma) + 2");

  int n = f.ground();
  auto lower_half = [&](const SetFamily& g) {
    std::vector<Mask> ms;
    for (Mask m : g.members())
      if (2 * popcount(m) <= n) ms.push_back(m);
    return SetFamily::of(n, std::move(ms));
  };
  SetFamily primal = lower_half(f);
  SetFamily dualized_family = lower_half(complement_dual(f));
  Rat primal_mass = lubell_mass(primal), dual_mass = lubell_mass(dualized_family);
  bool dualized = dual_mass > primal_mass;  // ties stay on the primal side
  const SetFamily& w = dualized ? dualized_family : primal;

  Rat deep = Rat(2 * r) / gamma;
  auto survivor = survivor_scan(w, deep, gamma);
  if (!survivor) fail(Errc::proof_step, "no flexible deep member survived the filters");
  Mask a = *survivor;
  Mask t = pivots(w, a);
  int tsz = popcount(t);
  if (tsz < r) fail(Errc::proof_step, "pivot set smaller than r");

  SetFamily d = restrict_to_subcube(w, {0, a});
  Mask t_packed = pack_bits(t, a);
  SetFamily proj = projection(d, t_packed);
  Rat proj_mass = lubell_mass(proj);

  // Shattered r-subset of the pivot coordinates, then an antichain of
  // representatives, one per trace.
  Mask rset = 0;
  std::vector<Mask> picks;
  Mask last = full_mask(r) << (tsz - r);
  for (Mask cand_r = full_mask(r);; cand_r = next_comb(cand_r)) {
    if (shatters(proj, cand_r)) {
      std::vector<std::vector<Mask>> cand(std::size_t{1} << r);
      for (Mask m : proj.members()) cand[pack_bits(m & cand_r, cand_r)].push_back(m);
      TracePicker picker{cand, {}, 0};
      if (picker.pick(0)) {
        rset = cand_r;
        picks = std::move(picker.chosen);
        break;
      }
    }
    if (cand_r == last) break;
  }
  if (picks.empty())
    fail(Errc::proof_step, "no shattered r-set admitted an antichain of representatives");

  auto lift2 = [&](Mask x) { return unpack_bits(unpack_bits(x, t_packed), a); };
  Mask r_orig = lift2(rset);

  std::vector<Mask> lifted(std::size_t{1} << r);
  for (Mask s = 0; s < (Mask{1} << r); ++s) {
    auto b = lift_by_trace(d, a, t, lift2(picks[s]));
    if (!b) fail(Errc::proof_step, "projected representative failed to lift");
    lifted[s] = *b;
  }
  std::vector<Mask> as;
  for (Mask rest = r_orig; rest;) {
    Mask i = rest & -rest;
    rest ^= i;
    auto cand = swap_witness(w, a, i);
    if (!cand) fail(Errc::proof_step, "pivot lost its swap partner");
    as.push_back(*cand);
  }

  ExtractionReport rep;
  rep.pattern = universal_dual(r);
  rep.image.assign(r + (std::size_t{1} << r), 0);
  for (int j = 0; j < r; ++j) rep.image[j] = as[j];
  for (Mask s = 0; s < (Mask{1} << r); ++s)
    rep.image[r + s] = lifted[full_mask(r) ^ s];  // b_S covers exactly {a_j : j in S}
  rep.tag = "U'" + std::to_string(r);
  if (dualized) {
    for (Mask& x : rep.image) x = f.full() ^ x;
    rep.pattern = universal(r);
    rep.tag = "U" + std::to_string(r);
  }
  rep.trace.push_back({"mass(F)", mass, std::nullopt});
  rep.trace.push_back({"mass(lower half)", dualized ? dual_mass : primal_mass, std::nullopt});
  rep.trace.push_back({"dualized", Rat(dualized ? 1 : 0), std::nullopt});
  rep.trace.push_back({"chosen A", std::nullopt, a});
  rep.trace.push_back({"downset mass at A", down_mass(w, a), std::nullopt});
  rep.trace.push_back({"pivot set T", std::nullopt, t});
  rep.trace.push_back({"projection mass", proj_mass, std::nullopt});
  rep.trace.push_back({"shattered R", std::nullopt, r_orig});
  if (!rep.validate()) fail(Errc::proof_step, "universal witness failed validation");
  return rep;
}

ExtractionReport extract_height2(const SetFamily& f, const Poset& p) {
  if (height(p) > 2) fail(Errc::precondition, "extract_height2 requires a pattern of height <= 2");
  int r = p.size();
  if (r == 0) return ExtractionReport{p, {}, {}, "empty"};
  Rat mass = lubell_mass(f);
  Interval thr = Interval(4 * r) +
                 (Interval(32) * Interval::log2_const() * Interval(r)).sqrt() + Interval(6);
  if (!thr.rat_above(mass))
    fail(Errc::threshold_not_met, "height-2 extraction requires mass > 4r + sqrt(32 ln2 r) + 6");

  Interval g = Interval(1) - (Interval::log2_const() / Interval(2)).sqrt() / Interval(r).sqrt();
  Rat gamma = dyadic_mid(g);

  ExtractionReport univ = extract_universal(f, r, gamma);
  Embedding into_universal = univ.tag[1] == '\''
                                 ? embed_height2_into_universal(p)
                                 : embed_height2_into_universal(dual(p));

  ExtractionReport rep;
  rep.pattern = p;
  for (int x = 0; x < r; ++x) rep.image.push_back(univ.image[into_universal.map[x]]);
  rep.tag = univ.tag;
  rep.trace.push_back({"gamma", gamma, std::nullopt});
  append_child_trace(rep, "universal: ", univ);
  if (!rep.validate()) fail(Errc::proof_step, "height-2 witness failed validation");
  return rep;
}

SetFamily b3_to_s3_reduce(const SetFamily& f) {
  if (f.is_empty()) fail(Errc::precondition, "b3_to_s3_reduce needs a nonempty family");
  auto [cube, cube_mass] = max_interval_members_only(f);
  SetFamily sub = restrict_to_subcube(f, cube);
  return family_without(family_without(sub, 0), sub.full());
}

}  // namespace lubell
