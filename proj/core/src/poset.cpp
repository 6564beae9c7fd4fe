#include "lubell/poset.hpp"

#include <algorithm>
#include <numeric>

#include "lubell/bitset.hpp"
#include "lubell/error.hpp"

namespace lubell {

Poset closure_of(int n, std::vector<std::uint8_t> lt) {
  // Warshall closure on bitset rows, then antisymmetry check.
  std::vector<Bitset> rows(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lt[static_cast<std::size_t>(a) * n + b]) rows[a].set(b);
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (rows[a].test(k)) rows[a] |= rows[k];
  for (int a = 0; a < n; ++a) {
    if (rows[a].test(a)) fail(Errc::validation, "cycle detected: relation is not antisymmetric");
    for (int b = 0; b < n; ++b) lt[static_cast<std::size_t>(a) * n + b] = rows[a].test(b);
  }
  Poset p;
  p.n_ = n;
  p.lt_ = std::move(lt);
  return p;
}

Poset Poset::from_relations(int size, std::span<const std::pair<int, int>> pairs) {
  if (size < 0) fail(Errc::validation, "poset size must be nonnegative");
  std::vector<std::uint8_t> lt(static_cast<std::size_t>(size) * size, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= size || b >= size)
      fail(Errc::validation, "relation index out of range");
    if (a == b) fail(Errc::validation, "cycle detected: relation is not antisymmetric");
    lt[static_cast<std::size_t>(a) * size + b] = 1;
  }
  return closure_of(size, std::move(lt));
}

Poset Poset::from_relations(int size, std::initializer_list<std::pair<int, int>> pairs) {
  return from_relations(size, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

bool Poset::is_maximal(int a) const {
  for (int b = 0; b < n_; ++b)
    if (less(a, b)) return false;
  return true;
}

bool Poset::is_minimal(int a) const {
  for (int b = 0; b < n_; ++b)
    if (less(b, a)) return false;
  return true;
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n_)
      fail(Errc::validation, "label count differs from poset size");
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::validation, "labels must be distinct");
  }
  labels_ = std::move(labels);
}

std::string Poset::label_of(int i) const {
  if (!labels_.empty()) return labels_[i];
  return std::to_string(i);
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n_ && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

Poset chain(int r) {
  if (r < 0) fail(Errc::precondition, "chain size must be nonnegative");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < r; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_relations(r, pairs);
}

Poset antichain(int r) {
  if (r < 0) fail(Errc::precondition, "antichain size must be nonnegative");
  return Poset::from_relations(r, std::span<const std::pair<int, int>>{});
}

Poset boolean_poset(int k) {
  if (k < 0 || k > 20) fail(Errc::precondition, "boolean_poset supports 0 <= k <= 20");
  int n = 1 << k;
  std::vector<Mask> elems(static_cast<std::size_t>(n));
  std::iota(elems.begin(), elems.end(), 0);
  std::sort(elems.begin(), elems.end(), canonical_less);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (elems[a] != elems[b] && subset_of(elems[a], elems[b])) pairs.emplace_back(a, b);
  return Poset::from_relations(n, pairs);
}

Poset standard_example(int r) {
  if (r < 0) fail(Errc::precondition, "standard_example size must be nonnegative");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) pairs.emplace_back(r + j, i);  // b_j < a_i iff i != j
  return Poset::from_relations(2 * r, pairs);
}

Poset universal(int r) {
  if (r < 0 || r > 16) fail(Errc::precondition, "universal supports 0 <= r <= 16");
  int n = r + (1 << r);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < r; ++j)
    for (Mask s = 0; s < (Mask{1} << r); ++s)
      if (s & (Mask{1} << j)) pairs.emplace_back(j, r + static_cast<int>(s));
  return Poset::from_relations(n, pairs);
}

Poset universal_dual(int r) { return dual(universal(r)); }

Poset v2() { return Poset::from_relations(3, {{0, 1}, {0, 2}}); }

Poset dual(const Poset& p) {
  int n = p.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.less(a, b)) pairs.emplace_back(b, a);
  return Poset::from_relations(n, pairs);
}

int height(const Poset& p) {
  int n = p.size();
  // Longest chain by DP over a linear extension.
  std::vector<int> order(n), down(n, 1);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = 0, db = 0;
    for (int c = 0; c < n; ++c) {
      da += p.less(c, a);
      db += p.less(c, b);
    }
    return da < db;
  });
  int best = 0;
  for (int idx = 0; idx < n; ++idx) {
    int a = order[idx];
    for (int jdx = 0; jdx < idx; ++jdx) {
      int b = order[jdx];
      if (p.less(b, a)) down[a] = std::max(down[a], down[b] + 1);
    }
    best = std::max(best, down[a]);
  }
  return best;
}

namespace {

// Max independent set on the comparability graph, branch and bound.
int mis(const std::vector<Bitset>& adj, Bitset cand, int current, int& best) {
  int remaining = cand.count();
  if (current + remaining <= best) return best;
  int v = cand.next(0);
  if (v < 0) {
    best = std::max(best, current);
    return best;
  }
  // Branch: v in the antichain, then v out.
  Bitset with = cand;
  with.reset(v);
  with.and_not(adj[v]);
  mis(adj, with, current + 1, best);
  cand.reset(v);
  mis(adj, cand, current, best);
  return best;
}

}  // namespace

int width(const Poset& p) {
  int n = p.size();
  if (n == 0) return 0;
  std::vector<Bitset> adj(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.comparable(a, b)) adj[a].set(b);
  int best = 0;
  mis(adj, Bitset(n, true), 0, best);
  return best;
}

Poset compose_series(const Poset& p, const Poset& q) {
  int np = p.size(), nq = q.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b)
      if (p.less(a, b)) pairs.emplace_back(a, b);
  for (int a = 0; a < nq; ++a)
    for (int b = 0; b < nq; ++b)
      if (q.less(a, b)) pairs.emplace_back(np + a, np + b);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) pairs.emplace_back(a, np + b);
  return Poset::from_relations(np + nq, pairs);
}

Poset compose_series_middle(const Poset& p1, const Poset& p2) {
  // Elements: p1, then u, then p2.
  int n1 = p1.size(), n2 = p2.size(), u = n1;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b)
      if (p1.less(a, b)) pairs.emplace_back(a, b);
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b)
      if (p2.less(a, b)) pairs.emplace_back(n1 + 1 + a, n1 + 1 + b);
  for (int a = 0; a < n1; ++a) pairs.emplace_back(a, u);
  for (int b = 0; b < n2; ++b) pairs.emplace_back(u, n1 + 1 + b);
  return Poset::from_relations(n1 + 1 + n2, pairs);
}

Poset compose_parallel(const Poset& p, const Poset& q) {
  int np = p.size(), nq = q.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b)
      if (p.less(a, b)) pairs.emplace_back(a, b);
  for (int a = 0; a < nq; ++a)
    for (int b = 0; b < nq; ++b)
      if (q.less(a, b)) pairs.emplace_back(np + a, np + b);
  return Poset::from_relations(np + nq, pairs);
}

namespace {

struct EmbedSearch {
  const Poset& pat;
  const Poset& tgt;
  EmbedMode mode;
  std::vector<Bitset> up, down, incomp;  // target relation rows
  std::vector<int> map;
  std::vector<Bitset> cand;  // per pattern element

  EmbedSearch(const Poset& p, const Poset& t, EmbedMode m) : pat(p), tgt(t), mode(m) {
    int nt = tgt.size();
    up.assign(nt, Bitset(nt));
    down.assign(nt, Bitset(nt));
    incomp.assign(nt, Bitset(nt));
    for (int a = 0; a < nt; ++a)
      for (int b = 0; b < nt; ++b) {
        if (tgt.less(a, b)) up[a].set(b);
        else if (tgt.less(b, a)) down[a].set(b);
        else if (a != b) incomp[a].set(b);
      }
    map.assign(pat.size(), -1);

    // Static prune: an element with a down-chain (up-chain) of length h must
    // land on a target element with at least that much room.
    std::vector<int> pdh = chain_depths(pat, false), puh = chain_depths(pat, true);
    std::vector<int> tdh = chain_depths(tgt, false), tuh = chain_depths(tgt, true);
    cand.assign(pat.size(), Bitset(nt));
    for (int i = 0; i < pat.size(); ++i)
      for (int j = 0; j < nt; ++j)
        if (tdh[j] >= pdh[i] && tuh[j] >= puh[i]) cand[i].set(j);
  }

  static std::vector<int> chain_depths(const Poset& p, bool upward) {
    int n = p.size();
    std::vector<int> depth(n, 1), order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = 0, db = 0;
      for (int c = 0; c < n; ++c) {
        da += upward ? p.less(a, c) : p.less(c, a);
        db += upward ? p.less(b, c) : p.less(c, b);
      }
      return da < db;
    });
    for (int idx = 0; idx < n; ++idx) {
      int a = order[idx];
      for (int jdx = 0; jdx < idx; ++jdx) {
        int b = order[jdx];
        bool rel = upward ? p.less(a, b) : p.less(b, a);
        if (rel) depth[a] = std::max(depth[a], depth[b] + 1);
      }
    }
    return depth;
  }

  bool dfs(int i) {
    if (i == pat.size()) return true;
    Bitset c = cand[i];
    for (int k = 0; k < i; ++k) {
      int j = map[k];
      if (pat.less(k, i)) c &= up[j];
      else if (pat.less(i, k)) c &= down[j];
      else if (mode == EmbedMode::induced) c &= incomp[j];
      else c.reset(j);  // weak mode: only injectivity for incomparable pairs
    }
    for (int j = c.next(0); j >= 0; j = c.next(j + 1)) {
      map[i] = j;
      if (dfs(i + 1)) return true;
    }
    map[i] = -1;
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_induced_embedding(const Poset& pattern, const Poset& target,
                                                EmbedMode mode) {
  if (pattern.size() > target.size()) return std::nullopt;
  EmbedSearch s(pattern, target, mode);
  if (!s.dfs(0)) return std::nullopt;
  return Embedding{std::move(s.map)};
}

bool validate_embedding(const Poset& pattern, const Poset& target, const Embedding& e,
                        EmbedMode mode) {
  int k = pattern.size();
  if (static_cast<int>(e.map.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (e.map[i] < 0 || e.map[i] >= target.size()) return false;
    for (int j = 0; j < i; ++j)
      if (e.map[i] == e.map[j]) return false;
  }
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (x == y) continue;
      bool pr = pattern.less(x, y), tr = target.less(e.map[x], e.map[y]);
      if (mode == EmbedMode::induced ? (pr != tr) : (pr && !tr)) return false;
    }
  return true;
}

bool is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  return find_induced_embedding(p, q).has_value() && find_induced_embedding(q, p).has_value();
}

Embedding embed_height2_into_universal(const Poset& p) {
  if (height(p) > 2) fail(Errc::precondition, "embed_height2_into_universal requires height <= 2");
  int r = p.size();
  std::vector<int> maximal, rest;
  for (int i = 0; i < r; ++i) (p.is_maximal(i) ? maximal : rest).push_back(i);
  int m = static_cast<int>(maximal.size());

  std::vector<int> slot(r, -1);  // 1-based proof index of each element
  for (int q = 0; q < m; ++q) slot[maximal[q]] = q + 1;
  for (std::size_t q = 0; q < rest.size(); ++q) slot[rest[q]] = m + 1 + static_cast<int>(q);

  Embedding e;
  e.map.assign(r, -1);
  for (int q = 0; q < m; ++q) e.map[maximal[q]] = q;  // a-slot q+1 has index q
  for (int x : rest) {
    Mask s = Mask{1} << (slot[x] - 1);  // the private index
    for (int q = 0; q < m; ++q)
      if (p.less(x, maximal[q])) s |= Mask{1} << q;
    e.map[x] = r + static_cast<int>(s);
  }
  if (!validate_embedding(p, universal_dual(r), e))
    fail(Errc::proof_step, "universal embedding failed validation");
  return e;
}

}  // namespace lubell
