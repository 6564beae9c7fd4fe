#include "lubell/rational.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace lubell {

namespace {

// Rows of Pascal's triangle, grown on demand.
std::vector<std::vector<Int>>& binom_rows() {
  static std::vector<std::vector<Int>> rows{{Int(1)}};
  return rows;
}
std::mutex binom_mutex;

}  // namespace

const Int& binom(unsigned n, long k) {
  static const Int zero(0);
  if (k < 0 || k > static_cast<long>(n)) return zero;
  std::lock_guard<std::mutex> lock(binom_mutex);
  auto& rows = binom_rows();
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<Int> row(prev.size() + 1, Int(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][static_cast<std::size_t>(k)];
}

Rat binom_inv(unsigned n, unsigned k) {
  Rat q(Int(1), binom(n, k));
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

std::string rat_decimal(const Rat& q, int digits) {
  bool neg = q < 0;
  Rat a = neg ? Rat(-q) : q;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int scaled = (a.get_num() * scale) / a.get_den();
  Int whole = scaled / scale, frac = scaled % scale;
  std::string fs = frac.get_str();
  fs.insert(fs.begin(), digits - fs.size(), '0');
  while (fs.size() > 1 && fs.back() == '0') fs.pop_back();
  std::string out = (neg ? "-" : "") + whole.get_str();
  if (fs != "0") out += "." + fs;
  return out;
}

double rat_double(const Rat& q) { return q.get_d(); }

Int rat_ceil(const Rat& q) {
  Int quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (rem != 0) quo += 1;
  return quo;
}

}  // namespace lubell
