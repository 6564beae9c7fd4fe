#include "lubell/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "lubell/error.hpp"

namespace lubell {

namespace {

// Pattern relations flattened for the hot path.
struct PatternRel {
  int k;
  std::vector<std::uint8_t> lt;
  explicit PatternRel(const Poset& p) : k(p.size()), lt(static_cast<std::size_t>(k) * k) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) lt[static_cast<std::size_t>(a) * k + b] = p.less(a, b);
  }
  bool less(int a, int b) const { return lt[static_cast<std::size_t>(a) * k + b]; }
};

// Chosen family plus comparability rows as single 64-bit words (the universe
// of a 6-cube has at most 64 sets).
struct ChosenState {
  std::vector<Mask> sets;
  std::vector<std::uint64_t> up, down;  // indices of strict supersets/subsets

  void push(Mask x) {
    std::uint64_t u = 0, d = 0;
    std::uint64_t bit_new = 1ull << sets.size();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i] == x) continue;
      if (subset_of(sets[i], x)) {
        d |= 1ull << i;
        up[i] |= bit_new;
      } else if (subset_of(x, sets[i])) {
        u |= 1ull << i;
        down[i] |= bit_new;
      }
    }
    sets.push_back(x);
    up.push_back(u);
    down.push_back(d);
  }

  void pop() {
    std::uint64_t bit_old = ~(1ull << (sets.size() - 1));
    sets.pop_back();
    up.pop_back();
    down.pop_back();
    for (auto& w : up) w &= bit_old;
    for (auto& w : down) w &= bit_old;
  }
};

// Does the chosen family contain an induced copy of the pattern that uses the
// most recently added set?  Only such embeddings can be new.
struct IncrementalChecker {
  const PatternRel& rel;

  bool copy_using_last(const ChosenState& st) const {
    int m = static_cast<int>(st.sets.size());
    if (rel.k == 0) return true;
    if (rel.k > m) return false;
    int last = m - 1;
    std::vector<int> map(rel.k, -1);
    for (int pinned = 0; pinned < rel.k; ++pinned) {
      map[pinned] = last;
      if (dfs(st, 0, pinned, map)) return true;
      map[pinned] = -1;
    }
    return false;
  }

 private:
  bool dfs(const ChosenState& st, int i, int pinned, std::vector<int>& map) const {
    if (i == rel.k) return true;
    if (i == pinned) return dfs(st, i + 1, pinned, map);
    int m = static_cast<int>(st.sets.size());
    std::uint64_t cand = m == 64 ? ~0ull : (1ull << m) - 1;
    for (int j = 0; j < rel.k && cand; ++j) {
      if (j == i || map[j] < 0) continue;
      int t = map[j];
      cand &= ~(1ull << t);
      if (rel.less(j, i)) cand &= st.up[t];
      else if (rel.less(i, j)) cand &= st.down[t];
      else cand &= ~(st.up[t] | st.down[t]);
    }
    while (cand) {
      int t = __builtin_ctzll(cand);
      cand &= cand - 1;
      map[i] = t;
      if (dfs(st, i + 1, pinned, map)) return true;
    }
    map[i] = -1;
    return false;
  }
};

struct Searcher {
  int n;
  PatternRel rel;
  IncrementalChecker checker;
  std::vector<Mask> order;   // universe in branch order (extremes first)
  std::vector<Rat> weight;   // objective weight per position
  std::vector<Rat> suffix;   // remaining weight from position i on
  std::uint64_t budget;
  bool pin_empty;

  std::mutex mu;
  Rat best{-1};
  std::vector<Mask> best_sets;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhaustive{true};
  std::atomic<std::uint64_t> best_version{0};

  bool lubell;

  Searcher(int n_, const Poset& p, const SearchOptions& opt, bool lubell_objective)
      : n(n_), rel(p), checker{rel}, budget(opt.node_budget), pin_empty(opt.require_empty_set),
        lubell(lubell_objective) {
    std::vector<Mask> universe;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (!(pin_empty && m == 0)) universe.push_back(m);
    std::sort(universe.begin(), universe.end(), [&](Mask a, Mask b) {
      int da = std::abs(2 * popcount(a) - n), db = std::abs(2 * popcount(b) - n);
      if (da != db) return da > db;  // middle sets last
      return canonical_less(a, b);
    });
    order = std::move(universe);
    weight.reserve(order.size());
    for (Mask m : order) weight.push_back(lubell ? binom_inv(n, popcount(m)) : Rat(1));
    suffix.assign(order.size() + 1, Rat(0));
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + weight[i];
  }

  void offer(const Rat& value, const std::vector<Mask>& sets, bool canonical_ties) {
    std::lock_guard<std::mutex> lock(mu);
    bool better = value > best;
    if (!better && canonical_ties && value == best) {
      std::vector<Mask> a = sets, b = best_sets;
      std::sort(a.begin(), a.end(), canonical_less);
      std::sort(b.begin(), b.end(), canonical_less);
      better = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            canonical_less);
    }
    if (better) {
      best = value;
      best_sets = sets;
      best_version.fetch_add(1, std::memory_order_relaxed);
    }
  }

  Rat snapshot_best() {
    std::lock_guard<std::mutex> lock(mu);
    return best;
  }

  void dfs(ChosenState& st, std::size_t idx, Rat current, Rat& local_best,
           std::uint64_t& local_version, bool canonical_ties) {
    if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
      exhaustive.store(false, std::memory_order_relaxed);
      return;
    }
    std::uint64_t v = best_version.load(std::memory_order_relaxed);
    if (v != local_version) {
      local_best = snapshot_best();
      local_version = v;
    }
    if (idx == order.size()) {
      offer(current, st.sets, canonical_ties);
      local_version = ~0ull;  // force refresh
      return;
    }
    Rat bound = current + suffix[idx];
    if (bound < local_best || (bound == local_best && !canonical_ties)) return;
    // include first
    st.push(order[idx]);
    if (!checker.copy_using_last(st))
      dfs(st, idx + 1, current + weight[idx], local_best, local_version, canonical_ties);
    st.pop();
    dfs(st, idx + 1, current, local_best, local_version, canonical_ties);
  }
};

std::vector<std::vector<Mask>> seed_families(int n, bool pin_empty) {
  std::vector<std::vector<Mask>> seeds;
  auto add = [&](std::vector<Mask> s) {
    if (pin_empty) s.push_back(0);
    std::sort(s.begin(), s.end(), canonical_less);
    s.erase(std::unique(s.begin(), s.end()), s.end());
    seeds.push_back(std::move(s));
  };
  auto level = [&](int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (popcount(m) == k) out.push_back(m);
    return out;
  };
  add({});
  add(level(n / 2));
  if (n >= 1) {
    auto two = level(n / 2);
    auto mid2 = level(std::min(n, n / 2 + 1));
    two.insert(two.end(), mid2.begin(), mid2.end());
    add(two);
  }
  std::vector<Mask> chain_sets;
  for (int k = 0; k <= n; ++k) chain_sets.push_back(full_mask(k));
  add(chain_sets);
  return seeds;
}

SearchResult run_search(int n, const Poset& p, SearchOptions opt, bool lubell_objective) {
  if (n < 0 || n > 6) fail(Errc::capacity, "la_star_exact: exact search is capped at n <= 6");
  if (opt.require_empty_set && !is_p_free(SetFamily::of(n, {0}), p))
    fail(Errc::precondition, "no family containing the empty set is P-free for this pattern");

  Searcher s(n, p, opt, lubell_objective);
  Rat pinned_weight = opt.require_empty_set ? Rat(1) : Rat(0);

  // Seed the incumbent with easy P-free candidates.
  for (auto& seed : seed_families(n, opt.require_empty_set)) {
    SetFamily sf = SetFamily::of(n, seed);
    if (!is_p_free(sf, p)) continue;
    Rat value(0);
    for (Mask m : sf.members())
      value += lubell_objective ? binom_inv(n, popcount(m)) : Rat(1);
    s.offer(value, sf.members(), false);
  }

  ChosenState st;
  if (opt.require_empty_set) st.push(0);

  int threads = opt.canonical ? 1 : std::max(1, opt.threads);
  if (threads == 1) {
    Rat local_best = s.snapshot_best();
    std::uint64_t ver = s.best_version.load();
    s.dfs(st, 0, pinned_weight, local_best, ver, opt.canonical);
  } else {
    // Split on the first few include/exclude decisions; workers share the
    // incumbent.  The optimum is schedule-independent, the witness is not.
    int depth = 0;
    while ((1 << depth) < 4 * threads && depth + 1 < static_cast<int>(s.order.size())) ++depth;
    std::vector<std::uint32_t> prefixes;
    for (std::uint32_t pf = 0; pf < (1u << depth); ++pf) prefixes.push_back(pf);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t at = next.fetch_add(1);
        if (at >= prefixes.size()) return;
        std::uint32_t pf = prefixes[at];
        ChosenState local;
        if (opt.require_empty_set) local.push(0);
        Rat current = pinned_weight;
        bool feasible = true;
        for (int d = 0; d < depth && feasible; ++d) {
          if (pf & (1u << d)) {
            local.push(s.order[d]);
            if (s.checker.copy_using_last(local)) feasible = false;
            else current += s.weight[d];
          }
        }
        if (!feasible) continue;
        Rat local_best = s.snapshot_best();
        std::uint64_t ver = s.best_version.load();
        s.dfs(local, depth, current, local_best, ver, false);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult res;
  res.nodes = s.nodes.load();
  res.exhaustive = s.exhaustive.load();
  res.optimum = s.best;
  res.witness = SetFamily::of(n, s.best_sets);
  if (!is_p_free(res.witness, p)) fail(Errc::proof_step, "witness failed P-free revalidation");
  return res;
}

}  // namespace

SearchResult la_star_exact(int n, const Poset& p, SearchOptions opt) {
  return run_search(n, p, opt, opt.lubell_objective);
}

SearchResult lubell_sup_exact(int n, const Poset& p, SearchOptions opt) {
  opt.lubell_objective = true;
  return run_search(n, p, opt, true);
}

Int erdos_value(int n, int r) {
  if (r < 2) fail(Errc::precondition, "erdos_value requires r >= 2");
  std::vector<Int> coeffs;
  for (int k = 0; k <= n; ++k) coeffs.push_back(binom(n, k));
  std::sort(coeffs.begin(), coeffs.end(), std::greater<Int>());
  Int sum(0);
  for (int i = 0; i < r - 1 && i < static_cast<int>(coeffs.size()); ++i) sum += coeffs[i];
  return sum;
}

Int sperner_value(int n) { return binom(n, n / 2); }

std::vector<std::pair<int, Int>> v2_table(int max_n) {
  if (max_n > 5) fail(Errc::capacity, "v2_table is capped at n <= 5");
  std::vector<std::pair<int, Int>> out;
  for (int n = 0; n <= max_n; ++n) {
    auto res = la_star_exact(n, v2());
    out.emplace_back(n, Int(res.optimum.get_num()));
  }
  return out;
}

}  // namespace lubell
