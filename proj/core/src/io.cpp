#include "lubell/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "lubell/error.hpp"

namespace lubell {

namespace {

[[noreturn]] void format_fail(int line, const std::string& what) {
  fail(Errc::format, "line " + std::to_string(line) + ": " + what);
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool parse_int(const std::string& s, long& out) {
  try {
    std::size_t used = 0;
    out = std::stol(s, &used);
    return used == s.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

std::string subset_to_string(Mask m) {
  if (m == 0) return "-";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if (m & (Mask{1} << i)) {
      if (!first) os << ",";
      os << (i + 1);
      first = false;
    }
  return os.str();
}

SetFamily parse_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1;
  std::vector<Mask> members;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (n < 0) {
      std::istringstream head(s);
      std::string word;
      head >> word;
      if (word != "family") format_fail(lineno, "expected 'family <n>' header");
      std::string rest;
      head >> rest;
      if (!parse_int(rest, n) || n < 0 || n > SetFamily::kMaxGround)
        format_fail(lineno, "ground size must be an integer in [0, 62]");
      continue;
    }
    if (s == "-") {
      members.push_back(0);
      continue;
    }
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
      Mask m = 0;
      try {
        m = std::stoull(s.substr(2), nullptr, 16);
      } catch (...) {
        format_fail(lineno, "bad hex bitmask");
      }
      if (m & ~full_mask(static_cast<int>(n))) format_fail(lineno, "bitmask outside ground set");
      members.push_back(m);
      continue;
    }
    Mask m = 0;
    long prev = 0;
    std::istringstream fields(s);
    std::string field;
    while (std::getline(fields, field, ',')) {
      long v;
      if (!parse_int(strip(field), v)) format_fail(lineno, "bad element '" + field + "'");
      if (v < 1 || v > n) format_fail(lineno, "element out of range [1, n]");
      if (v <= prev) format_fail(lineno, "elements must be strictly ascending");
      prev = v;
      m |= Mask{1} << (v - 1);
    }
    members.push_back(m);
  }
  if (n < 0) fail(Errc::format, "missing 'family <n>' header");
  return SetFamily::of(static_cast<int>(n), std::move(members));
}

SetFamily parse_family_text(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

std::string emit_family(const SetFamily& f) {
  std::ostringstream os;
  os << "family " << f.ground() << "\n";
  for (Mask m : f.members()) os << subset_to_string(m) << "\n";
  return os.str();
}

Poset parse_poset(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream fields(s);
    if (n < 0) {
      std::string word, rest;
      fields >> word >> rest;
      if (word != "poset" || !parse_int(rest, n) || n < 0)
        format_fail(lineno, "expected 'poset <size>' header");
      labels.assign(static_cast<std::size_t>(n), "");
      continue;
    }
    std::string first;
    fields >> first;
    if (first == "label") {
      std::string idx, name;
      fields >> idx >> name;
      long i;
      if (!parse_int(idx, i) || i < 0 || i >= n || name.empty())
        format_fail(lineno, "expected 'label <index> <name>'");
      labels[i] = name;
      continue;
    }
    std::string rel, second;
    fields >> rel >> second;
    long a, b;
    if (rel != "<" || !parse_int(first, a) || !parse_int(second, b))
      format_fail(lineno, "expected '<i> < <j>'");
    if (a < 0 || b < 0 || a >= n || b >= n) format_fail(lineno, "relation index out of range");
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) fail(Errc::format, "missing 'poset <size>' header");
  Poset p = Poset::from_relations(static_cast<int>(n), pairs);
  bool any_label = false;
  for (const auto& l : labels) any_label = any_label || !l.empty();
  if (any_label) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i].empty()) labels[i] = "e" + std::to_string(i);
    p.set_labels(labels);
  }
  return p;
}

Poset parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::string emit_poset(const Poset& p) {
  std::ostringstream os;
  os << "poset " << p.size() << "\n";
  for (auto [a, b] : p.covers()) os << a << " < " << b << "\n";
  if (!p.labels().empty())
    for (int i = 0; i < p.size(); ++i) os << "label " << i << " " << p.labels()[i] << "\n";
  return os.str();
}

std::optional<Poset> poset_from_token(const std::string& token) {
  auto num = [&](std::size_t from) -> std::optional<long> {
    if (from >= token.size()) return std::nullopt;
    long v;
    if (!parse_int(token.substr(from), v) || v < 0 || v > 20) return std::nullopt;
    return v;
  };
  if (token == "V2") return v2();
  if (token.size() >= 2 && token[0] == 'U' && token[1] == 'd') {
    if (auto r = num(2)) return universal_dual(static_cast<int>(*r));
    return std::nullopt;
  }
  if (token.empty()) return std::nullopt;
  auto r = num(1);
  if (!r) return std::nullopt;
  switch (token[0]) {
    case 'C': return chain(static_cast<int>(*r));
    case 'A': return antichain(static_cast<int>(*r));
    case 'B': return *r <= 4 ? std::optional<Poset>(boolean_poset(static_cast<int>(*r)))
                             : std::nullopt;
    case 'S': return standard_example(static_cast<int>(*r));
    case 'U': return *r <= 5 ? std::optional<Poset>(universal(static_cast<int>(*r)))
                             : std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace lubell
