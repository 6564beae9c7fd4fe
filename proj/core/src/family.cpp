#include "lubell/family.hpp"

#include <algorithm>
#include <array>

#include "lubell/error.hpp"

namespace lubell {

Poset closure_of(int n, std::vector<std::uint8_t> lt);  // defined in poset.cpp

SetFamily SetFamily::of(int ground, std::vector<Mask> members) {
  if (ground < 0 || ground > kMaxGround)
    fail(Errc::validation, "ground size must lie in [0, 62]");
  Mask full = full_mask(ground);
  for (Mask m : members)
    if (m & ~full) fail(Errc::validation, "member has bits outside the ground set");
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SetFamily f;
  f.ground_ = ground;
  f.members_ = std::move(members);
  return f;
}

bool SetFamily::contains(Mask a) const { return index_of(a) >= 0; }

int SetFamily::index_of(Mask a) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), a, canonical_less);
  if (it == members_.end() || *it != a) return -1;
  return static_cast<int>(it - members_.begin());
}

std::vector<long> SetFamily::size_counts() const {
  std::vector<long> counts(ground_ + 1, 0);
  for (Mask m : members_) ++counts[popcount(m)];
  return counts;
}

Rat lubell_mass(const SetFamily& f) {
  Rat total(0);
  auto counts = f.size_counts();
  for (int k = 0; k <= f.ground(); ++k)
    if (counts[k]) total += Rat(counts[k]) * binom_inv(f.ground(), k);
  return total;
}

Rat lubell_on_interval(const SetFamily& f, Subcube i) {
  if (!subset_of(i.bottom, i.top) || (i.top & ~f.full()))
    fail(Errc::precondition, "invalid subcube for this ground set");
  int m = i.dim(), base = popcount(i.bottom);
  std::vector<long> counts(m + 1, 0);
  for (Mask c : f.members())
    if (subset_of(i.bottom, c) && subset_of(c, i.top)) ++counts[popcount(c) - base];
  Rat total(0);
  for (int k = 0; k <= m; ++k)
    if (counts[k]) total += Rat(counts[k]) * binom_inv(m, k);
  return total;
}

Rat lubell_down(const SetFamily& f, Mask a) { return lubell_on_interval(f, {0, a}); }
Rat lubell_up(const SetFamily& f, Mask a) { return lubell_on_interval(f, {a, f.full()}); }

Rat chain_hit_probability(const SetFamily& f, int ground_cap) {
  int n = f.ground();
  if (n > ground_cap)
    fail(Errc::capacity, "chain_hit_probability: ground exceeds the DP cap of " +
                             std::to_string(ground_cap));
  std::size_t table = std::size_t{1} << n;
  std::vector<std::uint8_t> in_f(table, 0);
  for (Mask m : f.members()) in_f[m] = 1;
  // avoiding[S]: chain prefixes ∅..S meeting no member.  Counts are at most
  // n! <= 20!, which fits in 64 bits.
  std::vector<std::uint64_t> avoiding(table, 0);
  avoiding[0] = in_f[0] ? 0 : 1;
  for (Mask s = 1; s < table; ++s) {
    if (in_f[s]) continue;
    std::uint64_t acc = 0;
    for (Mask rest = s; rest;) {
      Mask low = rest & -rest;
      acc += avoiding[s ^ low];
      rest ^= low;
    }
    avoiding[s] = acc;
  }
  Int total(1);
  for (int k = 2; k <= n; ++k) total *= k;
  Rat missed(Int(static_cast<unsigned long>(avoiding[table - 1])), total);
  missed.canonicalize();
  return Rat(1) - missed;
}

namespace {

std::pair<Mask, Rat> heavy_side(const SetFamily& f, Direction dir) {
  if (f.is_empty()) fail(Errc::precondition, "heavy-witness search needs a nonempty family");
  Mask best_set = 0;
  Rat best(-1);
  for (Mask a : f.members()) {
    Rat v = dir == Direction::up ? lubell_up(f, a) : lubell_down(f, a);
    if (v > best) {
      best = v;
      best_set = a;
    }
  }
  return {best_set, best};
}

}  // namespace

std::pair<Mask, Rat> find_heavy_top(const SetFamily& f) { return heavy_side(f, Direction::up); }
std::pair<Mask, Rat> find_heavy_bottom(const SetFamily& f) { return heavy_side(f, Direction::down); }

bool is_shallow(const SetFamily& f, const Rat& alpha, Direction dir) {
  for (Mask a : f.members()) {
    Rat v = dir == Direction::up ? lubell_up(f, a) : lubell_down(f, a);
    if (v > alpha) return false;
  }
  return true;
}

namespace {

std::pair<Subcube, Rat> max_interval_over(const SetFamily& f, const std::vector<Mask>& bottoms,
                                          const std::vector<Mask>& tops) {
  int n = f.ground();
  Subcube best_cube{0, f.full()};
  Rat best(-1);
  std::vector<long> counts(n + 1, 0);
  std::vector<Mask> uplist;
  for (Mask a : bottoms) {
    int base = popcount(a);
    uplist.clear();
    for (Mask c : f.members())
      if (subset_of(a, c)) uplist.push_back(c);
    for (Mask b : tops) {
      if (!subset_of(a, b)) continue;
      int m = popcount(b) - base;
      std::fill(counts.begin(), counts.begin() + m + 1, 0);
      for (Mask c : uplist)
        if (subset_of(c, b)) ++counts[popcount(c) - base];
      Rat mass(0);
      for (int k = 0; k <= m; ++k)
        if (counts[k]) mass += Rat(counts[k]) * binom_inv(m, k);
      if (mass > best) {
        best = mass;
        best_cube = {a, b};
      }
    }
  }
  return {best_cube, best};
}

std::vector<Mask> with_extra(const std::vector<Mask>& base, Mask extra) {
  std::vector<Mask> out = base;
  out.push_back(extra);
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::pair<Subcube, Rat> max_interval(const SetFamily& f) {
  return max_interval_over(f, with_extra(f.members(), 0), with_extra(f.members(), f.full()));
}

std::pair<Subcube, Rat> max_interval_members_only(const SetFamily& f) {
  if (f.is_empty()) fail(Errc::precondition, "max_interval_members_only needs a nonempty family");
  return max_interval_over(f, f.members(), f.members());
}

bool is_balanced(const SetFamily& f) { return max_interval(f).second <= lubell_mass(f); }

SetFamily restrict_to_subcube(const SetFamily& f, Subcube i) {
  if (!subset_of(i.bottom, i.top) || (i.top & ~f.full()))
    fail(Errc::precondition, "invalid subcube for this ground set");
  Mask universe = i.top & ~i.bottom;
  std::vector<Mask> members;
  for (Mask c : f.members())
    if (subset_of(i.bottom, c) && subset_of(c, i.top))
      members.push_back(pack_bits(c & universe, universe));
  return SetFamily::of(popcount(universe), std::move(members));
}

SetFamily complement_dual(const SetFamily& f) {
  std::vector<Mask> members;
  members.reserve(f.size());
  for (Mask c : f.members()) members.push_back(f.full() & ~c);
  return SetFamily::of(f.ground(), std::move(members));
}

SetFamily projection(const SetFamily& f, Mask t) {
  if (t & ~f.full()) fail(Errc::precondition, "projection target outside the ground set");
  std::vector<Mask> members;
  members.reserve(f.size());
  for (Mask c : f.members()) members.push_back(pack_bits(c & t, t));
  return SetFamily::of(popcount(t), std::move(members));
}

Mask pivots(const SetFamily& f, Mask a) {
  if (!f.contains(a)) fail(Errc::precondition, "pivots: the set must be a member");
  Mask result = 0, outside = f.full() & ~a;
  for (Mask rest = a; rest;) {
    Mask i = rest & -rest;
    rest ^= i;
    for (Mask out = outside; out;) {
      Mask j = out & -out;
      out ^= j;
      if (f.contains((a ^ i) | j)) {
        result |= i;
        break;
      }
    }
  }
  return result;
}

bool is_gamma_flexible(const SetFamily& f, Mask a, const Rat& gamma) {
  return Rat(popcount(pivots(f, a))) >= gamma * Rat(popcount(a));
}

bool shatters(const SetFamily& f, Mask r) {
  int k = popcount(r);
  if (k > 20) fail(Errc::capacity, "shatters: subset too large to enumerate traces");
  std::vector<std::uint8_t> seen(std::size_t{1} << k, 0);
  std::size_t found = 0, want = std::size_t{1} << k;
  for (Mask c : f.members()) {
    Mask trace = pack_bits(c & r, r);
    if (!seen[trace]) {
      seen[trace] = 1;
      if (++found == want) return true;
    }
  }
  return false;
}

namespace {

// Next same-popcount mask (Gosper); call with v != 0.
Mask next_combination(Mask v) {
  Mask c = v & -v, r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

constexpr double kEnumCap = 8e6;  // documented cap on exhaustive subset sweeps

}  // namespace

std::optional<Mask> find_shattered(const SetFamily& f, int d) {
  int n = f.ground();
  if (d == 0) return f.is_empty() ? std::nullopt : std::optional<Mask>(0);
  if (d > n) return std::nullopt;
  if (binom(n, d).get_d() > kEnumCap)
    fail(Errc::capacity, "shattered-set enumeration exceeds the documented cap");
  Mask r = full_mask(d), last = full_mask(d) << (n - d);
  while (true) {
    if (shatters(f, r)) return r;
    if (r == last) return std::nullopt;
    r = next_combination(r);
  }
}

int vc_dimension(const SetFamily& f) {
  if (f.is_empty()) fail(Errc::precondition, "vc_dimension of an empty family");
  int n = f.ground();
  int max_d = 0;
  while ((std::size_t{1} << (max_d + 1)) <= f.size() && max_d < n) ++max_d;
  int best = 0;
  for (int d = 1; d <= max_d; ++d) {
    if (!find_shattered(f, d)) break;
    best = d;
  }
  return best;
}

bool validate_private_system(const SetFamily& f, const PrivateSystem& s, int r) {
  if (popcount(s.r_set) != r || static_cast<int>(s.witnesses.size()) != r) return false;
  int idx = 0;
  for (Mask rest = s.r_set; rest; rest ^= rest & -rest, ++idx) {
    Mask i = rest & -rest;
    if (!f.contains(s.witnesses[idx])) return false;
    if ((s.witnesses[idx] & s.r_set) != i) return false;  // i ∈ B_j iff i == j
  }
  return true;
}

namespace {

std::optional<PrivateSystem> private_rec(const SetFamily& f, int r) {
  if (r == 0) return PrivateSystem{};
  int n = f.ground();
  if (f.is_empty() || n == 0) return std::nullopt;

  // Masses of the upper-deletion subcubes Q_i = [∅, [n]-{i}].
  Rat mass = lubell_mass(f);
  int j = -1;
  Rat best(-1);
  for (int i = 0; i < n; ++i) {
    Rat v = lubell_on_interval(f, {0, f.full() & ~(Mask{1} << i)});
    if (v > best) {
      best = v;
      j = i;
    }
  }
  Mask jbit = Mask{1} << j;
  Mask universe = f.full() & ~jbit;
  SetFamily sub = restrict_to_subcube(f, {0, universe});

  if (best >= mass) {
    // A proper subcube carries at least the whole mass: recurse there.
    auto rec = private_rec(sub, r);
    if (!rec) return std::nullopt;
    PrivateSystem lifted;
    lifted.r_set = unpack_bits(rec->r_set, universe);
    for (Mask w : rec->witnesses) lifted.witnesses.push_back(unpack_bits(w, universe));
    return lifted;
  }

  // Peel coordinate j: the subcube keeps mass > r-1, and every coordinate is
  // covered by some member (an uncovered one would dominate).
  auto rec = private_rec(sub, r - 1);
  if (!rec) return std::nullopt;
  Mask r_rest = unpack_bits(rec->r_set, universe);
  std::vector<Mask> witnesses;
  for (Mask w : rec->witnesses) witnesses.push_back(unpack_bits(w, universe));

  // B_j: smallest member containing j; if it touches the recursive R-set,
  // fall back to the smallest member containing j and avoiding it.
  Mask bj = 0;
  bool have = false;
  for (Mask c : f.members())
    if (c & jbit) {
      if (!have || (c & r_rest) == 0) {
        bj = c;
        have = true;
        if ((c & r_rest) == 0) break;
      }
    }
  if (!have || (bj & r_rest)) return std::nullopt;

  // Merge: witnesses stay aligned with ascending elements of the R-set.
  PrivateSystem out;
  out.r_set = r_rest | jbit;
  int k = 0;
  for (Mask rest = out.r_set; rest; rest ^= rest & -rest) {
    Mask i = rest & -rest;
    if (i == jbit)
      out.witnesses.push_back(bj);
    else
      out.witnesses.push_back(witnesses[k++]);
  }
  return out;
}

std::optional<PrivateSystem> private_exhaustive(const SetFamily& f, int r) {
  int n = f.ground();
  if (r > n) return std::nullopt;
  if (r == 0) return PrivateSystem{};
  if (binom(n, r).get_d() > kEnumCap)
    fail(Errc::capacity, "private_system: exhaustive fallback exceeds the documented cap");
  Mask rset = full_mask(r);
  while (true) {
    PrivateSystem sys;
    sys.r_set = rset;
    bool ok = true;
    for (Mask rest = rset; rest && ok; rest ^= rest & -rest) {
      Mask i = rest & -rest;
      bool found = false;
      for (Mask c : f.members())
        if ((c & rset) == i) {
          sys.witnesses.push_back(c);
          found = true;
          break;
        }
      ok = found;
    }
    if (ok) return sys;
    if (rset == (full_mask(r) << (n - r))) return std::nullopt;
    rset = next_combination(rset);
  }
}

}  // namespace

std::optional<PrivateSystem> private_system(const SetFamily& f, int r) {
  if (r < 0) fail(Errc::precondition, "private_system: r must be nonnegative");
  if (r == 0) return PrivateSystem{};
  auto rec = private_rec(f, r);
  if (rec && validate_private_system(f, *rec, r)) return rec;
  return private_exhaustive(f, r);
}

Subcube quadrant_cube(int n, int i, int j, Quadrant q) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n || n < 2)
    fail(Errc::precondition, "quadrants need distinct coordinates in a ground of size >= 2");
  Mask bi = Mask{1} << i, bj = Mask{1} << j, full = full_mask(n);
  switch (q) {
    case Quadrant::both: return {bi | bj, full};
    case Quadrant::first_only: return {bi, full & ~bj};
    case Quadrant::second_only: return {bj, full & ~bi};
    case Quadrant::neither: return {0, full & ~(bi | bj)};
  }
  fail(Errc::precondition, "unknown quadrant");
}

SetFamily subcube_quadrant(const SetFamily& f, int i, int j, Quadrant q) {
  return restrict_to_subcube(f, quadrant_cube(f.ground(), i, j, q));
}

Rat theta_pair(const SetFamily& f, int i, int j) {
  Rat total(0);
  for (Quadrant q :
       {Quadrant::both, Quadrant::first_only, Quadrant::second_only, Quadrant::neither})
    total += lubell_on_interval(f, quadrant_cube(f.ground(), i, j, q));
  return total;
}

Poset inclusion_order(const SetFamily& f) {
  int n = static_cast<int>(f.size());
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && subset_of(f.member(a), f.member(b)))
        lt[static_cast<std::size_t>(a) * n + b] = 1;
  return closure_of(n, std::move(lt));
}

bool is_p_free(const SetFamily& f, const Poset& p) {
  return !find_induced_embedding(p, inclusion_order(f)).has_value();
}

std::optional<Embedding> find_copy(const SetFamily& f, const Poset& p) {
  return find_induced_embedding(p, inclusion_order(f));
}

bool validate_family_embedding(const Poset& pattern, std::span<const Mask> image, EmbedMode mode) {
  int k = pattern.size();
  if (static_cast<int>(image.size()) != k) return false;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (x == y) continue;
      if (image[x] == image[y]) return false;
      bool pr = pattern.less(x, y);
      bool tr = subset_of(image[x], image[y]);  // strict since distinct
      if (mode == EmbedMode::induced ? (pr != tr) : (pr && !tr)) return false;
    }
  return true;
}

}  // namespace lubell
