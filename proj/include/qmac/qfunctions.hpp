#pragma once

#include <vector>

#include "qmac/bigint.hpp"
#include "qmac/series.hpp"

namespace qmac {

/// Selector for the paired upper/lower signs that run through the whole
/// series catalogue.  Plus always picks the upper symbol, Minus the lower
/// one, in every formula of this library; unit() gives the matching +1/-1.
enum class Sign { Plus, Minus };

inline int unit(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* to_string(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

/// Exact polynomial in q with big-integer coefficients (no truncation).
/// Trailing zero coefficients are trimmed on construction, so equality is
/// plain coefficient equality and degree() is exact (-1 for zero).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial one() { return QPolynomial({Int(1)}); }
  static QPolynomial monomial(Int c, int exponent);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int e) const {
    if (e < 0 || e > degree()) return Int(0);
    return c_[static_cast<size_t>(e)];
  }
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval_at_one() const;

  /// Substitute q -> q^base and truncate at `order`.
  TruncatedSeries to_series(int base, int order) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

QPolynomial add(const QPolynomial& a, const QPolynomial& b);
QPolynomial mul(const QPolynomial& a, const QPolynomial& b);
QPolynomial shift(const QPolynomial& a, int exponent);  // multiply by q^exponent

inline QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) { return add(a, b); }
inline QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) { return mul(a, b); }

/// Finite q-shifted factorial specialized to first argument (+/-)q^start with
/// modulus q^step:
///
///   prod_{j=0}^{count-1} (1 - s * q^(start + j*step)),   s = unit(sign)
///
/// Covers (q;q)_m, (-q;q)_m, (q;q^2)_m, (q^2;q^2)_m and friends.  count = 0
/// gives one(order).
TruncatedSeries pochhammer_finite(Sign sign, int start, int step, int count, int order);

/// The corresponding infinite product, truncated exactly: factors whose
/// exponent exceeds the order are congruent to 1 mod q^(order+1) and are
/// skipped, so the result equals the true infinite product's truncation.
TruncatedSeries pochhammer_infinite(Sign sign, int start, int step, int order);

/// Gaussian binomial coefficient [n, k]_q as an exact polynomial; the zero
/// polynomial outside 0 <= k <= n.  Computed by the Pascal recurrence
/// [n,k] = [n-1,k-1] + q^k [n-1,k] over exact polynomials, memoized on (n,k).
QPolynomial q_binomial(int n, int k);

/// [n, k]_{q^base} truncated at `order`.
TruncatedSeries q_binomial_series(int n, int k, int base, int order);

/// Ordinary binomial coefficient, 0 whenever n < 0, k < 0 or k > n.
Int binomial(int n, int k);

/// Generalized binomial for possibly-negative upper index:
/// C(n, k) = n(n-1)...(n-k+1) / k!, so C(n, k) = (-1)^k C(k-n-1, k) for n < 0.
/// Needed where an alternating sum runs the upper index below zero.
Int binomial_signed(int n, int k);

}  // namespace qmac
