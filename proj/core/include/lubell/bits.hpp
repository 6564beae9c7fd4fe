#pragma once

#include <bit>
#include <cstdint>

namespace lubell {

using Mask = std::uint64_t;

inline int popcount(Mask x) { return std::popcount(x); }

inline Mask full_mask(int n) { return n == 0 ? 0 : (~Mask{0} >> (64 - n)); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Canonical order on subsets: by size, then by numeric value.
inline bool canonical_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

// Compacts the bits of x selected by universe down to positions 0..|universe|-1,
// preserving ascending bit order. pack/unpack are mutually inverse on the universe.
inline Mask pack_bits(Mask x, Mask universe) {
  Mask out = 0;
  int at = 0;
  while (universe) {
    Mask low = universe & -universe;
    if (x & low) out |= Mask{1} << at;
    ++at;
    universe ^= low;
  }
  return out;
}

inline Mask unpack_bits(Mask y, Mask universe) {
  Mask out = 0;
  int at = 0;
  while (universe) {
    Mask low = universe & -universe;
    if (y & (Mask{1} << at)) out |= low;
    ++at;
    universe ^= low;
  }
  return out;
}

// Visits all subsets of mask, ascending as integers (∅ first, mask last).
template <typename F>
void for_each_subset(Mask mask, F&& visit) {
  Mask s = 0;
  while (true) {
    visit(s);
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

}  // namespace lubell
