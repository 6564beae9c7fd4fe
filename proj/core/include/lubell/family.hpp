#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lubell/bits.hpp"
#include "lubell/poset.hpp"
#include "lubell/rational.hpp"

namespace lubell {

/// Interval [bottom, top] in the Boolean lattice; bottom ⊆ top.
struct Subcube {
  Mask bottom = 0;
  Mask top = 0;
  int dim() const { return popcount(top & ~bottom); }
};

/// Family of subsets of [n], deduplicated, in canonical (size, value) order.
/// Ground sizes up to 62.
class SetFamily {
 public:
  static constexpr int kMaxGround = 62;

  SetFamily() = default;
  static SetFamily of(int ground, std::vector<Mask> members);
  static SetFamily empty(int ground) { return of(ground, {}); }

  int ground() const { return ground_; }
  Mask full() const { return full_mask(ground_); }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }
  const std::vector<Mask>& members() const { return members_; }
  Mask member(std::size_t i) const { return members_[i]; }

  bool contains(Mask a) const;
  int index_of(Mask a) const;  // -1 when absent

  // Member counts per set size, length ground+1.
  std::vector<long> size_counts() const;

  bool operator==(const SetFamily&) const = default;

 private:
  int ground_ = 0;
  std::vector<Mask> members_;
};

enum class Direction { up, down };

// ---- Lubell-mass machinery (all exact rationals) ----

// Sum of 1/binom(n, |A|) over members: the expected number of hits of a
// uniform maximal chain.
Rat lubell_mass(const SetFamily& f);

// Mass relative to a subcube: sum over members A ⊆ C ⊆ B of
// 1/binom(|B|-|A|, |C|-|A|).
Rat lubell_on_interval(const SetFamily& f, Subcube i);

Rat lubell_down(const SetFamily& f, Mask a);  // interval [∅, A]
Rat lubell_up(const SetFamily& f, Mask a);    // interval [A, [n]]

// Exact probability that a uniform maximal chain ∅..[n] meets f, by a DP over
// the subset lattice counting f-avoiding chain prefixes.  Ground is capped
// (2^n table); default cap 20.
Rat chain_hit_probability(const SetFamily& f, int ground_cap = 20);

// Member maximizing the one-sided interval mass (ties: canonical-least).
// The maximum is at least lubell_mass(f)/p with p the chain-hit probability.
std::pair<Mask, Rat> find_heavy_top(const SetFamily& f);
std::pair<Mask, Rat> find_heavy_bottom(const SetFamily& f);

// Every member sees one-sided interval mass at most alpha.
bool is_shallow(const SetFamily& f, const Rat& alpha, Direction dir);

// Interval maximizing interval mass.  Candidate endpoints are drawn from
// F ∪ {∅} and F ∪ {[n]}: restricting an interval to start at its lowest
// family member and end at its highest can only increase the relative mass,
// so the maximum over these candidates is the global maximum.  Exhaustive
// over candidate pairs; intended for families up to a few thousand members.
std::pair<Subcube, Rat> max_interval(const SetFamily& f);
// Same search with both endpoints required to lie in f (f nonempty).
std::pair<Subcube, Rat> max_interval_members_only(const SetFamily& f);

// No interval carries more mass than the whole cube.
bool is_balanced(const SetFamily& f);

// Members inside the subcube, shifted and re-indexed to ground dim(i).
// Preserves interval mass: lubell_mass(result) == lubell_on_interval(f, i).
SetFamily restrict_to_subcube(const SetFamily& f, Subcube i);

// {[n] - A : A in f}; an involution preserving lubell_mass.
SetFamily complement_dual(const SetFamily& f);

// {A ∩ T : A in f}, re-indexed to ground |T|, deduplicated.
SetFamily projection(const SetFamily& f, Mask t);

// Pivots of a member A: elements i ∈ A such that (A - {i}) ∪ {j} is in f for
// some j outside A.  A must be a member.
Mask pivots(const SetFamily& f, Mask a);
bool is_gamma_flexible(const SetFamily& f, Mask a, const Rat& gamma);

bool shatters(const SetFamily& f, Mask r);
// Largest shattered set size; exhaustive over candidate subsets (documented
// cap on the enumeration size).
int vc_dimension(const SetFamily& f);
// First shattered d-subset in ascending mask order, when one exists.
std::optional<Mask> find_shattered(const SetFamily& f, int d);

/// R-system of private elements: witnesses[k] is the member B_i for the k-th
/// smallest i in r_set, with i ∈ B_j iff i == j for all i, j in the set.
struct PrivateSystem {
  Mask r_set = 0;
  std::vector<Mask> witnesses;
};

bool validate_private_system(const SetFamily& f, const PrivateSystem& s, int r);

// Constructive search following the subcube recursion: descend into a
// coordinate-deletion subcube when one carries at least the whole family's
// mass, otherwise peel the heaviest coordinate and extend the smaller system.
// Falls back to exhaustive search over r-sets at small scale, so absence
// answers there are exact.  Note that mass above r does NOT guarantee a
// system: witnesses are pairwise incomparable, so a chain never carries one
// for r >= 2 while chains reach mass 8/3.
std::optional<PrivateSystem> private_system(const SetFamily& f, int r);

// ---- coordinate-pair quadrants ----

enum class Quadrant { both, first_only, second_only, neither };

Subcube quadrant_cube(int n, int i, int j, Quadrant q);
SetFamily subcube_quadrant(const SetFamily& f, int i, int j, Quadrant q);
// Sum of the four quadrant interval masses for the pair {i, j}.
Rat theta_pair(const SetFamily& f, int i, int j);

// ---- inclusion order ----

Poset inclusion_order(const SetFamily& f);
bool is_p_free(const SetFamily& f, const Poset& p);
std::optional<Embedding> find_copy(const SetFamily& f, const Poset& p);

// Checks a pattern against concrete member sets (the restriction of the
// inclusion order to the image); image[i] is the set representing element i.
bool validate_family_embedding(const Poset& pattern, std::span<const Mask> image,
                               EmbedMode mode = EmbedMode::induced);

}  // namespace lubell
