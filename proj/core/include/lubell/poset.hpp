#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lubell/bits.hpp"

namespace lubell {

/// Finite strict partial order on elements 0..size-1, stored transitively
/// closed so comparability queries are O(1).
class Poset {
 public:
  Poset() = default;

  // Transitive closure of the given pairs; rejects cycles (antisymmetry).
  static Poset from_relations(int size, std::span<const std::pair<int, int>> pairs);
  static Poset from_relations(int size, std::initializer_list<std::pair<int, int>> pairs);

  int size() const { return n_; }
  bool less(int a, int b) const { return lt_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  bool is_maximal(int a) const;
  bool is_minimal(int a) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label_of(int i) const;

  // Cover pairs (a < b with nothing strictly between), for emission.
  std::vector<std::pair<int, int>> covers() const;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> lt_;  // row-major: lt_[a*n+b] == 1 iff a < b
  std::vector<std::string> labels_;
  friend Poset closure_of(int, std::vector<std::uint8_t>);
};

// Named posets.  Element-order conventions (documented, fixed by this
// library): a-elements before b-elements; b_S indexed by the bitmask of S;
// boolean_poset elements in canonical (size, value) order.
Poset chain(int r);
Poset antichain(int r);
Poset boolean_poset(int k);
Poset standard_example(int r);  // S_r: b_j < a_i iff i != j
Poset universal(int r);         // U_r: a_j < b_S iff j in S
Poset universal_dual(int r);    // U'_r: b_S < a_j iff j in S
Poset v2();                     // a < b_1, a < b_2

Poset dual(const Poset& p);
int height(const Poset& p);
// Maximum antichain, via exact maximum independent set on the comparability
// graph; exponential in the worst case, fine at desk scale.
int width(const Poset& p);

Poset compose_series(const Poset& p, const Poset& q);          // all of p below all of q
Poset compose_series_middle(const Poset& p1, const Poset& p2);  // p1 < u < p2
Poset compose_parallel(const Poset& p, const Poset& q);

/// Injective map from pattern elements to target elements.
struct Embedding {
  std::vector<int> map;
};

enum class EmbedMode { induced, weak };

// Lexicographically least embedding in pattern element order, or absence.
// induced: x < y iff f(x) < f(y); weak: x < y implies f(x) < f(y).
std::optional<Embedding> find_induced_embedding(const Poset& pattern, const Poset& target,
                                                EmbedMode mode = EmbedMode::induced);

// Independent checker used to revalidate every witness this library emits.
bool validate_embedding(const Poset& pattern, const Poset& target, const Embedding& e,
                        EmbedMode mode = EmbedMode::induced);

bool is_isomorphic(const Poset& p, const Poset& q);

// The explicit universal embedding for height-2 posets: maximal elements to
// a-slots, every other x to b_S with S = {slots of maximal elements above x}
// plus a private index.  Requires height(p) <= 2; target is universal_dual(r)
// with r = p.size().
Embedding embed_height2_into_universal(const Poset& p);

}  // namespace lubell
