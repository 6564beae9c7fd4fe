#pragma once

#include <cstdint>
#include <vector>

#include "lubell/family.hpp"
#include "lubell/poset.hpp"
#include "lubell/rational.hpp"

namespace lubell {

struct SearchOptions {
  bool lubell_objective = false;
  bool require_empty_set = false;
  std::uint64_t node_budget = 200'000'000;
  int threads = 1;
  bool canonical = false;  // deterministic sequential search, lex-least witness
};

struct SearchResult {
  Rat optimum;  // integral for the cardinality objective
  SetFamily witness;
  std::uint64_t nodes = 0;
  bool exhaustive = true;
};

// Exact maximum size (or Lubell mass) of a P-free family in the n-cube, by
// include/exclude DFS over the 2^n sets with incremental P-free checking and
// a current+remaining upper-bound prune.  Ground capped at 6 (documented).
SearchResult la_star_exact(int n, const Poset& p, SearchOptions opt = {});

// Same search with the exact-rational mass objective.
SearchResult lubell_sup_exact(int n, const Poset& p, SearchOptions opt = {});

// Sum of the r-1 largest binomial coefficients of row n (r >= 2).
Int erdos_value(int n, int r);
Int sperner_value(int n);

// Exact La*(n, V_2) for n = 0..max_n (max_n <= 5).
std::vector<std::pair<int, Int>> v2_table(int max_n);

}  // namespace lubell
