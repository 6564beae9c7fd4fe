#include "lubell/constructions.hpp"

#include <algorithm>

#include "lubell/error.hpp"

namespace lubell {

namespace {

constexpr double kMemberCap = 5e7;

void append_level(std::vector<Mask>& out, int n, int k) {
  if (k < 0 || k > n) fail(Errc::precondition, "level index outside [0, n]");
  if (k == 0) {
    out.push_back(0);
    return;
  }
  Mask m = full_mask(k), last = full_mask(k) << (n - k);
  while (true) {
    out.push_back(m);
    if (m == last) break;
    Mask c = m & -m, r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

}  // namespace

SetFamily levels(int n, const std::vector<int>& ks) {
  if (n < 0 || n > SetFamily::kMaxGround) fail(Errc::precondition, "ground size out of range");
  std::vector<int> sorted = ks;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  double total = 0;
  for (int k : sorted) total += binom(n, k).get_d();
  if (total > kMemberCap) fail(Errc::capacity, "levels: too many sets to materialize");
  std::vector<Mask> members;
  members.reserve(static_cast<std::size_t>(total));
  for (int k : sorted) append_level(members, n, k);
  return SetFamily::of(n, std::move(members));
}

SetFamily full_chain_family(int n) {
  if (n < 0 || n > SetFamily::kMaxGround) fail(Errc::precondition, "ground size out of range");
  std::vector<Mask> members;
  for (int k = 0; k <= n; ++k) members.push_back(full_mask(k));
  return SetFamily::of(n, std::move(members));
}

SetFamily priv_sharp(int n, int r) {
  if (r < 1 || r > n + 1) fail(Errc::precondition, "priv_sharp requires 1 <= r <= n+1");
  std::vector<Mask> members{0};
  for (int k = n - (r - 1) + 1; k <= n; ++k) append_level(members, n, k);
  return SetFamily::of(n, std::move(members));
}

VcExtremalResult vc_extremal(int n, int d, int t) {
  if (t < 1 || d < 1 || n < t) fail(Errc::precondition, "vc_extremal requires t >= 1, d >= 1, n >= t");

  // Nearly equal consecutive blocks, the first (n mod t) of size ceil(n/t).
  std::vector<Mask> parts;
  int base = n / t, extra = n % t, at = 0;
  for (int i = 0; i < t; ++i) {
    int len = base + (i < extra ? 1 : 0);
    parts.push_back(full_mask(len) << at);
    at += len;
  }

  std::vector<Mask> members;
  int floor_g = ((t - 1) * d) / t;  // floor((1-1/t)d)
  for (int k = n - floor_g + 1; k <= n; ++k) append_level(members, n, k);

  // H: per-part intersection strictly below d/t, i.e. at most cap.
  int cap = (d % t == 0) ? d / t - 1 : d / t;
  double est = 1;
  for (Mask z : parts) {
    double s = 0;
    for (int a = 0; a <= std::min(cap, popcount(z)); ++a) s += binom(popcount(z), a).get_d();
    est *= s;
  }
  if (est > kMemberCap) fail(Errc::capacity, "vc_extremal: H part too large to materialize");

  std::vector<Mask> partial{0};
  for (Mask z : parts) {
    std::vector<Mask> next;
    std::vector<Mask> choices;
    for (int a = 0; a <= std::min(cap, popcount(z)); ++a) append_level(choices, popcount(z), a);
    for (Mask p : partial)
      for (Mask c : choices) next.push_back(p | unpack_bits(c, z));
    partial = std::move(next);
  }
  members.insert(members.end(), partial.begin(), partial.end());

  return {SetFamily::of(n, std::move(members)), std::move(parts)};
}

namespace {

void cross_join(std::vector<Mask>& out, const std::vector<Mask>& gs, const std::vector<Mask>& hs) {
  for (Mask g : gs)
    for (Mask h : hs) out.push_back(g | h);
}

std::vector<Mask> block_level(Mask block, int k) {
  std::vector<Mask> raw;
  append_level(raw, popcount(block), k);
  std::vector<Mask> out;
  out.reserve(raw.size());
  for (Mask m : raw) out.push_back(unpack_bits(m, block));
  return out;
}

}  // namespace

SetFamily b2_lower(int n, PartitionSpec part) {
  if (part.s < 0 || part.t < 0 || part.r < 0 || part.total() != n)
    fail(Errc::precondition, "partition must be nonnegative and sum to n");
  Mask sblock = full_mask(part.s);
  Mask tblock = full_mask(part.t) << part.s;
  Mask rblock = full_mask(part.r) << (part.s + part.t);

  auto s1 = part.s >= 1 ? block_level(sblock, 1) : std::vector<Mask>{};
  auto t1 = part.t >= 1 ? block_level(tblock, 1) : std::vector<Mask>{};
  auto t2 = part.t >= 2 ? block_level(tblock, 2) : std::vector<Mask>{};
  auto r1 = part.r >= 1 ? block_level(rblock, 1) : std::vector<Mask>{};
  auto r2 = part.r >= 2 ? block_level(rblock, 2) : std::vector<Mask>{};

  std::vector<Mask> members{0};
  members.insert(members.end(), s1.begin(), s1.end());
  cross_join(members, s1, t1);
  for (Mask x : s1)
    for (Mask y : t1)
      for (Mask z : r1) members.push_back(x | y | z);
  members.insert(members.end(), t2.begin(), t2.end());
  members.insert(members.end(), r2.begin(), r2.end());
  cross_join(members, t2, r1);
  cross_join(members, t1, r2);
  return SetFamily::of(n, std::move(members));
}

Rat b2_lower_closed_form(int n, PartitionSpec part) {
  if (part.s < 0 || part.t < 0 || part.r < 0 || part.total() != n)
    fail(Errc::precondition, "partition must be nonnegative and sum to n");
  auto term = [&](const Int& num, int k) -> Rat {
    if (num == 0) return Rat(0);
    Rat q(num, binom(n, k));
    q.canonicalize();
    return q;
  };
  Int s(part.s), t(part.t), r(part.r);
  Int ct2 = t * (t - 1) / 2, cr2 = r * (r - 1) / 2;
  Rat out(1);
  out += term(s, 1);
  out += term(s * t + ct2 + cr2, 2);
  out += term(s * t * r + t * cr2 + ct2 * r, 3);
  return out;
}

}  // namespace lubell
