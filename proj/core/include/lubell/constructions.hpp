#pragma once

#include <vector>

#include "lubell/family.hpp"

namespace lubell {

/// Sizes of the three consecutive index blocks S, T, R partitioning [n].
struct PartitionSpec {
  long s = 0, t = 0, r = 0;
  long total() const { return s + t + r; }
};

// Union of the requested full levels of the n-cube.
SetFamily levels(int n, const std::vector<int>& ks);

// The maximal chain ∅ ⊂ {1} ⊂ {1,2} ⊂ ... ⊂ [n]; B_2-free with mass a_n.
SetFamily full_chain_family(int n);

// {∅} ∪ {A : |A| > n-(r-1)}.  Mass exactly r; admits no r-system of private
// elements.  Requires 1 <= r <= n+1.
SetFamily priv_sharp(int n, int r);

struct VcExtremalResult {
  SetFamily family;
  std::vector<Mask> parts;  // Z_1..Z_t, consecutive blocks, larger parts first
};

// G ∪ H with G = {A : |A| > n - floor((1-1/t)d)} and H the sets meeting every
// part Z_i in fewer than d/t elements.  VC dimension stays below d while the
// mass approaches 2d.
VcExtremalResult vc_extremal(int n, int d, int t);

// The diamond-free lower-bound family over blocks S, T, R: empty set,
// S-singletons, S∨T pairs, S∨T∨R triples, T-pairs, R-pairs, T-pairs ∨ R-
// singletons, T-singletons ∨ R-pairs.
SetFamily b2_lower(int n, PartitionSpec part);

// Its exact mass: 1 + s/n + (st + C(t,2) + C(r,2))/C(n,2)
//                   + (str + t·C(r,2) + C(t,2)·r)/C(n,3).
Rat b2_lower_closed_form(int n, PartitionSpec part);

}  // namespace lubell
