#include "qmac/qfunctions.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace qmac {

QPolynomial QPolynomial::monomial(Int c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("QPolynomial::monomial: negative exponent");
  std::vector<Int> v(static_cast<size_t>(exponent) + 1);
  v.back() = std::move(c);
  return QPolynomial(std::move(v));
}

Int QPolynomial::eval_at_one() const {
  Int s = 0;
  for (const Int& c : c_) s += c;
  return s;
}

TruncatedSeries QPolynomial::to_series(int base, int order) const {
  if (base < 1) throw std::invalid_argument("QPolynomial::to_series: base must be >= 1");
  if (order < 0) throw std::invalid_argument("QPolynomial::to_series: negative order");
  std::vector<Int> out(static_cast<size_t>(order) + 1);
  for (int e = 0; e <= degree(); ++e) {
    long long target = static_cast<long long>(e) * base;
    if (target > order) break;
    out[static_cast<size_t>(target)] = c_[static_cast<size_t>(e)];
  }
  return TruncatedSeries(std::move(out));
}

QPolynomial add(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Int> out(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1);
  for (int e = 0; e <= a.degree(); ++e) out[static_cast<size_t>(e)] += a.coeffs()[static_cast<size_t>(e)];
  for (int e = 0; e <= b.degree(); ++e) out[static_cast<size_t>(e)] += b.coeffs()[static_cast<size_t>(e)];
  return QPolynomial(std::move(out));
}

QPolynomial mul(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return QPolynomial();
  std::vector<Int> out(static_cast<size_t>(a.degree() + b.degree()) + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    const Int& ai = a.coeffs()[static_cast<size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      const Int& bj = b.coeffs()[static_cast<size_t>(j)];
      if (bj != 0) out[static_cast<size_t>(i + j)] += ai * bj;
    }
  }
  return QPolynomial(std::move(out));
}

QPolynomial shift(const QPolynomial& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("shift: negative exponent");
  if (a.is_zero()) return a;
  std::vector<Int> out(static_cast<size_t>(a.degree() + exponent) + 1);
  for (int e = 0; e <= a.degree(); ++e)
    out[static_cast<size_t>(e + exponent)] = a.coeffs()[static_cast<size_t>(e)];
  return QPolynomial(std::move(out));
}

TruncatedSeries pochhammer_finite(Sign sign, int start, int step, int count, int order) {
  if (start < 1 || step < 1) throw std::invalid_argument("pochhammer_finite: start and step must be >= 1");
  if (count < 0) throw std::invalid_argument("pochhammer_finite: negative count");
  TruncatedSeries r = TruncatedSeries::one(order);
  const Int factor_coeff = -unit(sign);
  for (int j = 0; j < count; ++j) {
    long long e = static_cast<long long>(start) + static_cast<long long>(j) * step;
    if (e > order) break;  // remaining factors are 1 mod q^(order+1)
    r = mul(r, TruncatedSeries::one(order) +
                   TruncatedSeries::monomial(factor_coeff, static_cast<int>(e), order));
  }
  return r;
}

TruncatedSeries pochhammer_infinite(Sign sign, int start, int step, int order) {
  if (start < 1 || step < 1) throw std::invalid_argument("pochhammer_infinite: start and step must be >= 1");
  // Exactly the factors that can touch coefficients <= order.
  int count = (order >= start) ? (order - start) / step + 1 : 0;
  return pochhammer_finite(sign, start, step, count, order);
}

QPolynomial q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return QPolynomial();
  if (k == 0 || k == n) return QPolynomial::one();

  static std::map<std::pair<int, int>, QPolynomial> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);

  // Iterative Pascal fill so a single lock suffices.
  std::vector<std::pair<int, int>> stack{{n, k}};
  while (!stack.empty()) {
    auto [nn, kk] = stack.back();
    if (kk <= 0 || kk >= nn || memo.count({nn, kk})) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (auto sub : {std::pair<int, int>{nn - 1, kk - 1}, std::pair<int, int>{nn - 1, kk}}) {
      if (sub.second > 0 && sub.second < sub.first && !memo.count(sub)) {
        stack.push_back(sub);
        ready = false;
      }
    }
    if (!ready) continue;
    auto fetch = [&](int a, int b) -> QPolynomial {
      if (b < 0 || a < 0 || b > a) return QPolynomial();
      if (b == 0 || b == a) return QPolynomial::one();
      return memo.at({a, b});
    };
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    memo[{nn, kk}] = add(fetch(nn - 1, kk - 1), shift(fetch(nn - 1, kk), kk));
    stack.pop_back();
  }
  return memo.at({n, k});
}

TruncatedSeries q_binomial_series(int n, int k, int base, int order) {
  return q_binomial(n, k).to_series(base, order);
}

Int binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: the running product is always a binomial coefficient
  }
  return r;
}

Int binomial_signed(int n, int k) {
  if (k < 0) return Int(0);
  if (n >= 0) return binomial(n, k);
  Int v = binomial(k - n - 1, k);
  return (k % 2 == 0) ? v : -v;
}

}  // namespace qmac
