#pragma once

#include <stdexcept>
#include <vector>

#include "qmac/bigint.hpp"

namespace qmac {

// Requested the inverse of a series whose constant term is not a unit of Z.
class InvalidInversion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Formal power series over Z truncated at a fixed order N, i.e. an element
/// of Z[[q]] / q^(N+1).  Index n holds the coefficient of q^n, 0 <= n <= N.
/// Values are immutable after construction; every operation is a pure
/// function, so series can be shared freely across threads.
///
/// Two series compare equal iff their orders match and all coefficients
/// match.  Comparing across different orders is only defined through
/// prefix_equal.
class TruncatedSeries {
 public:
  // order = coeffs.size() - 1; a series always stores its constant term.
  explicit TruncatedSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("TruncatedSeries: empty coefficient vector");
  }

  static TruncatedSeries zero(int order) {
    check_order(order);
    return TruncatedSeries(std::vector<Int>(static_cast<size_t>(order) + 1));
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s = zero(order);
    s.coeffs_[0] = 1;
    return s;
  }

  // Exponents beyond the order truncate to the zero series.
  static TruncatedSeries monomial(Int c, int exponent, int order) {
    check_order(order);
    if (exponent < 0)
      throw std::invalid_argument("monomial: negative exponent");
    TruncatedSeries s = zero(order);
    if (exponent <= order) s.coeffs_[static_cast<size_t>(exponent)] = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Int& operator[](int n) const { return coeffs_.at(static_cast<size_t>(n)); }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static void check_order(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  }

  std::vector<Int> coeffs_;
};

// Ring operations at a fixed order.  Mixing orders is a caller bug and
// throws rather than truncating silently.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse in Z[[q]]/q^(N+1).  Requires constant term +1 or
/// -1 (the units of Z); anything else throws InvalidInversion.
TruncatedSeries invert(const TruncatedSeries& a);

/// a(q^t) truncated at `order`: coefficient of q^(t*n) is a[n] for every n
/// with n <= a.order() and t*n <= order, all other coefficients zero.
TruncatedSeries substitute_power(const TruncatedSeries& a, int t, int order);

TruncatedSeries pow(const TruncatedSeries& a, int exponent);
TruncatedSeries scale(const TruncatedSeries& a, const Int& c);

/// The same series truncated at a smaller (or equal) order.
TruncatedSeries prefix(const TruncatedSeries& a, int order);

/// Coefficients 0..upto agree.  Requires upto <= min(a.order(), b.order()).
bool prefix_equal(const TruncatedSeries& a, const TruncatedSeries& b, int upto);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

// Renders "[c0, c1, ..., cN]" with full decimal coefficients.
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace qmac
