#include "lubell/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lubell/error.hpp"

namespace lubell {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rat& c, int deg) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RatPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const Rat& c) const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(v));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval RatPoly::eval(const Interval& x) const {
  Interval acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + Interval::from_rat(*it);
  return acc;
}

std::string RatPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (os.tellp() > 0) os << " + ";
    os << rat_str(c_[i]);
    if (i > 0) os << "*x^" << i;
  }
  return os.str();
}

namespace {

// Remainder of u by v (degree(v) >= 0).
RatPoly poly_rem(RatPoly u, const RatPoly& v) {
  while (u.degree() >= v.degree() && u.degree() >= 0) {
    Rat factor = u.coeff(u.degree()) / v.coeff(v.degree());
    int shift = u.degree() - v.degree();
    u = u - (v * RatPoly::monomial(factor, shift));
  }
  return u;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (b.degree() >= 0) {
    RatPoly r = poly_rem(a, b);
    a = b;
    b = r;
  }
  return a;
}

RatPoly poly_divexact(const RatPoly& u0, const RatPoly& g) {
  RatPoly u = u0, quo;
  while (u.degree() >= g.degree() && u.degree() >= 0) {
    Rat f = u.coeff(u.degree()) / g.coeff(g.degree());
    int s = u.degree() - g.degree();
    quo = quo + RatPoly::monomial(f, s);
    u = u - (g * RatPoly::monomial(f, s));
  }
  return quo;
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    RatPoly r = poly_rem(seq[seq.size() - 2], seq.back());
    if (r.degree() < 0) break;
    seq.push_back(r.scaled(Rat(-1)));
  }
  return seq;
}

int sign_changes(const std::vector<RatPoly>& seq, const Rat& x) {
  int changes = 0, prev = 0;
  for (const auto& q : seq) {
    Rat v = q.eval(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int count_roots(const RatPoly& p, const Rat& a, const Rat& b) {
  if (p.degree() < 0) fail(Errc::precondition, "root counting needs a nonzero polynomial");
  if (p.eval(a) == 0 || p.eval(b) == 0)
    fail(Errc::precondition, "root counting endpoints must not be roots");
  // Square-free part keeps Sturm exact in the presence of multiple roots.
  RatPoly g = poly_gcd(p, p.derivative());
  RatPoly q = g.degree() > 0 ? poly_divexact(p, g) : p;
  auto seq = sturm_sequence(q);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

std::vector<std::pair<Rat, Rat>> isolate_roots(const RatPoly& p, Rat a, Rat b) {
  // Nudge endpoints off roots.
  Rat step = (b - a) / 1024;
  while (p.eval(a) == 0) a -= step;
  while (p.eval(b) == 0) b += step;
  std::vector<std::pair<Rat, Rat>> out;
  std::vector<std::pair<Rat, Rat>> stack{{a, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int k = count_roots(p, lo, hi);
    if (k == 0) continue;
    if (k == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rat mid = (lo + hi) / 2;
    while (p.eval(mid) == 0) mid = (lo + mid) / 2;
    stack.push_back({mid, hi});
    stack.push_back({lo, mid});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::pair<Rat, Rat> refine_root(const RatPoly& p, Rat lo, Rat hi, const Rat& width) {
  int slo = p.eval(lo) > 0 ? 1 : -1;
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    Rat v = p.eval(mid);
    if (v == 0) {
      // Exact rational root: collapse to a point interval.
      return {mid, mid};
    }
    if ((v > 0 ? 1 : -1) == slo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

Poly2 Poly2::constant(const Rat& c) {
  Poly2 p;
  p.insert(0, 0, c);
  return p;
}

Poly2 Poly2::var(int which) {
  Poly2 p;
  p.insert(which == 0 ? 1 : 0, which == 0 ? 0 : 1, Rat(1));
  return p;
}

void Poly2::insert(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(i, j);
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_[key] = c;
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 out = *this;
  for (const auto& [k, c] : o.t_) out.insert(k.first, k.second, c);
  return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 out = *this;
  for (const auto& [k, c] : o.t_) out.insert(k.first, k.second, -c);
  return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 out;
  for (const auto& [k1, c1] : t_)
    for (const auto& [k2, c2] : o.t_)
      out.insert(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return out;
}

Poly2 Poly2::scaled(const Rat& c) const {
  Poly2 out;
  for (const auto& [k, v] : t_) out.insert(k.first, k.second, v * c);
  return out;
}

Poly2 Poly2::partial(int which) const {
  Poly2 out;
  for (const auto& [k, v] : t_) {
    int d = which == 0 ? k.first : k.second;
    if (d == 0) continue;
    out.insert(which == 0 ? k.first - 1 : k.first, which == 0 ? k.second : k.second - 1,
               v * Rat(d));
  }
  return out;
}

RatPoly Poly2::on_line(const Rat& ax, const Rat& bx, const Rat& ay, const Rat& by) const {
  RatPoly x_line(std::vector<Rat>{bx, ax});
  RatPoly y_line(std::vector<Rat>{by, ay});
  RatPoly acc;
  for (const auto& [k, v] : t_) {
    RatPoly term = RatPoly::monomial(v, 0);
    for (int i = 0; i < k.first; ++i) term = term * x_line;
    for (int j = 0; j < k.second; ++j) term = term * y_line;
    acc = acc + term;
  }
  return acc;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [k, v] : t_) {
    Rat term = v;
    for (int i = 0; i < k.first; ++i) term *= x;
    for (int j = 0; j < k.second; ++j) term *= y;
    acc += term;
  }
  return acc;
}

}  // namespace lubell
