#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lubell/family.hpp"
#include "lubell/poset.hpp"
#include "lubell/rational.hpp"

namespace lubell {

struct TraceStep {
  std::string label;
  std::optional<Rat> value;
  std::optional<Mask> set;
};

/// A verified witness: image[i] is the member representing pattern element i,
/// plus the proof-step trace that produced it.
struct ExtractionReport {
  Poset pattern;
  std::vector<Mask> image;
  std::vector<TraceStep> trace;
  std::string tag;

  bool validate() const { return validate_family_embedding(pattern, image); }
};

/// First-class extraction strategy: run succeeds on any family whose Lubell
/// mass exceeds alpha (and may succeed below).
struct Extractor {
  Poset pattern;
  Rat alpha;
  std::function<ExtractionReport(const SetFamily&)> run;
};

Extractor empty_extractor();
// Longest-chain based; succeeds when mass > r-1.
Extractor chain_extractor(int r);
// Max-antichain based; succeeds when mass > (8/3)(r-1): a family with no
// r-antichain splits into at most r-1 chains, and a chain carries mass at
// most max_n a_n = 8/3.
Extractor antichain_extractor(int r);
Extractor series_extractor(const Extractor& low, const Extractor& high);
Extractor parallel_extractor(const Extractor& left, const Extractor& right);

// Series step: filter the downward/upward shallow members, pick the least
// survivor u, extract below and above it.  Requires mass > alpha1+alpha2+2.
ExtractionReport extract_series(const SetFamily& f, const Extractor& low, const Rat& alpha1,
                                const Extractor& high, const Rat& alpha2);

// Parallel step: balance by restricting to the mass-maximizing interval, pick
// the first pair {i,j} with theta >= 4*mass-8, extract inside the two
// one-sided quadrants (cross-incomparable).  Requires mass > alpha+8.
ExtractionReport extract_parallel(const SetFamily& f, const Extractor& left,
                                  const Extractor& right, const Rat& alpha);

// Standard-example extraction: flexible+deep survivor A, pivot set T,
// projection of the downset, then a private-element system of size r.
// Requires every member of size <= delta*n and
// mass > r/gamma + ln(1/(1-delta))/(1-gamma) + 1 (certified comparison).
ExtractionReport extract_std_example(const SetFamily& f, int r, const Rat& gamma,
                                     const Rat& delta);

// Universal-poset extraction (tag "U_r" or "U'_r"): work in the lighter half
// (complement-dualizing if needed), survivor A, pivots T, then a shattered
// r-set in the projected downset.  Requires
// mass > 4r/gamma + 2 ln2/(1-gamma) + 2 (certified comparison).
ExtractionReport extract_universal(const SetFamily& f, int r, const Rat& gamma);

// Any height-<=2 pattern via the universal poset, with gamma = 1 - c/sqrt(r),
// c = sqrt(ln2/2).  Requires mass > 4r + sqrt(32 ln2 r) + 6.
ExtractionReport extract_height2(const SetFamily& f, const Poset& p);

// Restrict to the member-endpoint interval of maximal mass, shift, and drop
// the minimum and maximum members.  A B_3-free family leaves an S_3-free
// residue of mass only 2 below the interval mass.
SetFamily b3_to_s3_reduce(const SetFamily& f);

}  // namespace lubell
