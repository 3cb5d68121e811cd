#include "qmac/series.hpp"

#include <ostream>
#include <string>

namespace qmac {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "add");
  std::vector<Int> c(a.coeffs());
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "sub");
  std::vector<Int> c(a.coeffs());
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "mul");
  const size_t n = a.coeffs().size();
  std::vector<Int> c(n);
  // Cauchy product, indices beyond the order discarded.  Schoolbook O(N^2)
  // is plenty at the orders this library runs at.
  for (size_t i = 0; i < n; ++i) {
    const Int& ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (size_t j = 0; i + j < n; ++j) {
      const Int& bj = b.coeffs()[j];
      if (bj != 0) c[i + j] += ai * bj;
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries invert(const TruncatedSeries& a) {
  const Int& a0 = a.coeffs()[0];
  if (a0 != 1 && a0 != -1) {
    throw InvalidInversion("invert: constant term " + a0.str() +
                           " is not a unit of Z");
  }
  const size_t n = a.coeffs().size();
  std::vector<Int> b(n);
  b[0] = a0;  // 1/a0 == a0 for a0 = +-1
  for (size_t k = 1; k < n; ++k) {
    Int s = 0;
    for (size_t i = 1; i <= k; ++i) {
      if (a.coeffs()[i] != 0) s += a.coeffs()[i] * b[k - i];
    }
    b[k] = -a0 * s;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries substitute_power(const TruncatedSeries& a, int t, int order) {
  if (t < 1) throw std::invalid_argument("substitute_power: t must be >= 1");
  if (order < 0) throw std::invalid_argument("substitute_power: negative order");
  std::vector<Int> c(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= a.order() && static_cast<long long>(n) * t <= order; ++n) {
    c[static_cast<size_t>(n) * static_cast<size_t>(t)] = a.coeffs()[static_cast<size_t>(n)];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries pow(const TruncatedSeries& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

TruncatedSeries scale(const TruncatedSeries& a, const Int& c) {
  std::vector<Int> out(a.coeffs());
  for (Int& x : out) x *= c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries prefix(const TruncatedSeries& a, int order) {
  if (order < 0 || order > a.order())
    throw std::invalid_argument("prefix: order out of range");
  return TruncatedSeries(std::vector<Int>(a.coeffs().begin(),
                                          a.coeffs().begin() + order + 1));
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  os << '[';
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) os << ", ";
    os << s[n];
  }
  return os << ']';
}

bool prefix_equal(const TruncatedSeries& a, const TruncatedSeries& b, int upto) {
  if (upto < 0 || upto > a.order() || upto > b.order())
    throw std::invalid_argument("prefix_equal: upto out of range");
  for (int n = 0; n <= upto; ++n) {
    if (a.coeffs()[static_cast<size_t>(n)] != b.coeffs()[static_cast<size_t>(n)]) return false;
  }
  return true;
}

}  // namespace qmac
