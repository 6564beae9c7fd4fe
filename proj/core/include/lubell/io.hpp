#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lubell/family.hpp"
#include "lubell/poset.hpp"

namespace lubell {

// Family text format.  Line 1: "family <n>".  One subset per line after
// that: "-" for the empty set, "0x<hex>" for a raw bitmask, or a comma list
// of ascending 1-based elements.  Emission is canonical (sorted, decimal).
SetFamily parse_family(std::istream& in);
SetFamily parse_family_text(const std::string& text);
std::string emit_family(const SetFamily& f);

// Poset text format.  Line 1: "poset <size>".  Relation lines "i < j" with
// 0-based indices (closure applied), optional "label <i> <name>" lines.
Poset parse_poset(std::istream& in);
Poset parse_poset_text(const std::string& text);
std::string emit_poset(const Poset& p);

// Named-poset tokens: C<r>, A<r>, B<k>, S<r>, U<r>, Ud<r>, V2.
std::optional<Poset> poset_from_token(const std::string& token);

std::string subset_to_string(Mask m);  // ascending 1-based, "-" when empty

}  // namespace lubell
