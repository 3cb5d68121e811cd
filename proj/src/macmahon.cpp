#include "qmac/macmahon.hpp"

#include <string>
#include <vector>

namespace qmac {

namespace {

long long triangular(long long n) { return n * (n + 1) / 2; }

// (2n+1)/(2k+1) * C(n+k, 2k); the division is exact for all n, k >= 0.
Int odd_ratio_weight(int k, int n) {
  return exact_div(Int(2 * n + 1) * binomial(n + k, 2 * k), Int(2 * k + 1));
}

// 2n/(n+k) * C(n+k, 2k); exact for n >= k >= 1.
Int even_ratio_weight(int k, int n) {
  return exact_div(Int(2 * n) * binomial(n + k, 2 * k), Int(n + k));
}

// (j-i)/k * C(j-i+k-1, 2k-1); exact for j-i >= k >= 1.
Int pair_weight(int k, int i, int j) {
  return exact_div(Int(j - i) * binomial(j - i + k - 1, 2 * k - 1), Int(k));
}

int sign_pow(int u, int e) { return (u == 1 || e % 2 == 0) ? 1 : -1; }

// sum_{n>=k, T(n)<=order} (-1)^(n-k) * odd_ratio_weight(k,n) * q^(n(n+1)/2)
TruncatedSeries theta_sum_A(int k, int order) {
  TruncatedSeries s = TruncatedSeries::zero(order);
  for (int n = k; triangular(n) <= order; ++n) {
    Int w = odd_ratio_weight(k, n);
    if ((n - k) % 2 != 0) w = -w;
    s = add(s, TruncatedSeries::monomial(std::move(w), static_cast<int>(triangular(n)), order));
  }
  return s;
}

// sum_{n>=k, n^2<=order} (-1)^(n-k) * even_ratio_weight(k,n) * q^(n^2)
TruncatedSeries theta_sum_C(int k, int order) {
  TruncatedSeries s = TruncatedSeries::zero(order);
  for (int n = k; static_cast<long long>(n) * n <= order; ++n) {
    Int w = even_ratio_weight(k, n);
    if ((n - k) % 2 != 0) w = -w;
    s = add(s, TruncatedSeries::monomial(std::move(w), n * n, order));
  }
  return s;
}

// Double sum over i >= 0, j >= i+k of
//   inner_unit^(j-i-k) * pair_weight * q^(e(i)+e(j)) / (P_i P_j)
// with e(i) = i(i+1)/2 and P_i = (q;q)_i for family A, e(i) = i^2 and
// P_i = (q^2;q^2)_i for family C.  Terms start at q^(e(i)+e(j)), so the
// index cutoff is exact.
TruncatedSeries distinct_pair_sum(Family family, int k, int inner_unit, int order) {
  const int base = family == Family::A ? 1 : 2;
  auto min_exp = [&](int i) {
    return family == Family::A ? triangular(i) : static_cast<long long>(i) * i;
  };
  std::vector<TruncatedSeries> inv_poch;  // index i -> 1 / (q^base; q^base)_i
  auto inverse_pochhammer = [&](int i) -> const TruncatedSeries& {
    while (static_cast<int>(inv_poch.size()) <= i) {
      int n = static_cast<int>(inv_poch.size());
      inv_poch.push_back(invert(pochhammer_finite(Sign::Plus, base, base, n, order)));
    }
    return inv_poch[static_cast<size_t>(i)];
  };

  TruncatedSeries s = TruncatedSeries::zero(order);
  for (int i = 0; min_exp(i) <= order; ++i) {
    for (int j = i + k; min_exp(i) + min_exp(j) <= order; ++j) {
      Int w = pair_weight(k, i, j);
      if (sign_pow(inner_unit, j - i - k) < 0) w = -w;
      TruncatedSeries term = mul(inverse_pochhammer(i), inverse_pochhammer(j));
      term = mul(term, TruncatedSeries::monomial(std::move(w),
                                                 static_cast<int>(min_exp(i) + min_exp(j)), order));
      s = add(s, term);
    }
  }
  return s;
}

// Double sum over 0 <= i <= m-k, i+k <= j <= m of
//   inner_unit^(j-i-k) * pair_weight * [m,i] [m,j] q^(e(i)+e(j))
// in base q (family A, e(i) = i(i+1)/2) or q^2 (family C, e(i) = i^2).
TruncatedSeries binomial_pair_sum(Family family, int k, int m, int inner_unit, int order) {
  const int base = family == Family::A ? 1 : 2;
  auto exp_of = [&](int i) {
    return family == Family::A ? triangular(i) : static_cast<long long>(i) * i;
  };
  TruncatedSeries s = TruncatedSeries::zero(order);
  for (int i = 0; i <= m - k; ++i) {
    for (int j = i + k; j <= m; ++j) {
      long long e = exp_of(i) + exp_of(j);
      if (e > order) continue;
      Int w = pair_weight(k, i, j);
      if (sign_pow(inner_unit, j - i - k) < 0) w = -w;
      TruncatedSeries term = mul(q_binomial_series(m, i, base, order),
                                 q_binomial_series(m, j, base, order));
      term = mul(term, TruncatedSeries::monomial(std::move(w), static_cast<int>(e), order));
      s = add(s, term);
    }
  }
  return s;
}

TruncatedSeries family_series(Family family, Sign sign, int k, std::optional<int> m, int order) {
  return macmahon_series({family, sign, k, m, order});
}

// --- bare (inversion-free) sum builders shared by the quotient and cleared
// --- forms of the finite-m identities

// sum_{j=k}^{m} C(2j+1, j+k+1) A_{j,m}^+
TruncatedSeries a1_binomial_combination(int k, int m, int order) {
  TruncatedSeries s = TruncatedSeries::zero(order);
  for (int j = k; j <= m; ++j) {
    s = add(s, scale(family_series(Family::A, Sign::Plus, j, m, order),
                     binomial(2 * j + 1, j + k + 1)));
  }
  return s;
}

// sum_{j=k}^{m} sign^(j-k) C(2j, j+k) C_{j,m}^{sign}
TruncatedSeries a2_binomial_combination(Sign sg, int k, int m, int order) {
  TruncatedSeries s = TruncatedSeries::zero(order);
  for (int j = k; j <= m; ++j) {
    Int w = binomial(2 * j, j + k);
    if (sign_pow(unit(sg), j - k) < 0) w = -w;
    s = add(s, scale(family_series(Family::C, sg, j, m, order), w));
  }
  return s;
}

// sum_{j=k}^{m} (-1)^(j-k) odd_ratio_weight(k,j) [2m+1, m+j+1]_q q^(j(j+1)/2)
TruncatedSeries a3_expansion_sum(int k, int m, int order) {
  TruncatedSeries s = TruncatedSeries::zero(order);
  for (int j = k; j <= m; ++j) {
    if (triangular(j) > order) break;
    Int w = odd_ratio_weight(k, j);
    if ((j - k) % 2 != 0) w = -w;
    s = add(s, mul(q_binomial_series(2 * m + 1, m + j + 1, 1, order),
                   TruncatedSeries::monomial(std::move(w), static_cast<int>(triangular(j)), order)));
  }
  return s;
}

// sum_{j=k}^{m} (-sign)^(j-k) even_ratio_weight(k,j) [2m, m+j]_{q^2} q^(j^2)
TruncatedSeries a4_expansion_sum(Sign sg, int k, int m, int order) {
  TruncatedSeries s = TruncatedSeries::zero(order);
  for (int j = k; j <= m; ++j) {
    if (static_cast<long long>(j) * j > order) break;
    Int w = even_ratio_weight(k, j);
    if (sign_pow(-unit(sg), j - k) < 0) w = -w;
    s = add(s, mul(q_binomial_series(2 * m, m + j, 2, order),
                   TruncatedSeries::monomial(std::move(w), j * j, order)));
  }
  return s;
}

// q^e * [n, r]_{q^base}
TruncatedSeries shifted_q_binomial(int e, int n, int r, int base, int order) {
  return mul(TruncatedSeries::monomial(Int(1), e, order), q_binomial_series(n, r, base, order));
}

struct IdentityShape {
  bool finite_m;
  int min_k;
};

IdentityShape shape_of(std::string_view id) {
  if (id == "a-1" || id == "a-2") return {true, 0};
  if (id == "a-3" || id == "a-4" || id == "m-1" || id == "m-2") return {true, 1};
  if (id == "ar-1" || id == "os-1" || id == "os-2") return {false, 0};
  if (id == "ar-2" || id == "m-3" || id == "m-4" || id == "t3-a" || id == "t3-c") return {false, 1};
  throw std::invalid_argument("build_side: unknown identity id '" + std::string(id) + "'");
}

void validate_params(std::string_view id, const SideParams& p) {
  IdentityShape shape = shape_of(id);
  if (p.order < 0) throw std::invalid_argument("build_side: negative order");
  if (p.k < shape.min_k)
    throw std::invalid_argument("build_side: k below the identity's domain for '" +
                                std::string(id) + "'");
  if (shape.finite_m) {
    if (!p.m) throw std::invalid_argument("build_side: identity '" + std::string(id) +
                                          "' requires a finite m");
    if (*p.m < p.k)
      throw std::invalid_argument("build_side: requires m >= k for '" + std::string(id) + "'");
  }
}

}  // namespace

TruncatedSeries part_multiplicity_factor(int part, Sign sign, int order) {
  if (part < 1) throw std::invalid_argument("part_multiplicity_factor: part must be >= 1");
  if (order < 0) throw std::invalid_argument("part_multiplicity_factor: negative order");
  std::vector<Int> c(static_cast<size_t>(order) + 1);
  for (long long t = 1; part * t <= order; ++t) {
    Int w = t;
    if (sign == Sign::Minus && t % 2 == 0) w = -w;
    c[static_cast<size_t>(part * t)] = std::move(w);
  }
  return TruncatedSeries(std::move(c));
}

namespace {

// Shared engine for both families: dynamic programming over the part index,
// state = number of distinct parts used so far.  part_of maps the index
// lambda = 1, 2, ... to the actual part value.
template <typename PartOf>
TruncatedSeries family_dp(const SeriesSpec& spec, PartOf part_of) {
  if (spec.k < 0) throw std::invalid_argument("macmahon series: negative k");
  if (spec.order < 0) throw std::invalid_argument("macmahon series: negative order");
  const int order = spec.order;
  if (spec.k == 0) return TruncatedSeries::one(order);
  if (spec.m && *spec.m < spec.k) return TruncatedSeries::zero(order);  // empty sum

  // Indices whose part value exceeds the order contribute nothing below it.
  int max_index = 0;
  while (part_of(max_index + 1) <= order) ++max_index;
  if (spec.m) max_index = std::min(max_index, *spec.m);

  std::vector<TruncatedSeries> dp(static_cast<size_t>(spec.k) + 1,
                                  TruncatedSeries::zero(order));
  dp[0] = TruncatedSeries::one(order);
  for (int lambda = 1; lambda <= max_index; ++lambda) {
    TruncatedSeries factor = part_multiplicity_factor(part_of(lambda), spec.sign, order);
    for (int used = spec.k; used >= 1; --used) {
      dp[static_cast<size_t>(used)] =
          add(dp[static_cast<size_t>(used)], mul(dp[static_cast<size_t>(used - 1)], factor));
    }
  }
  return dp[static_cast<size_t>(spec.k)];
}

}  // namespace

TruncatedSeries macmahon_A(const SeriesSpec& spec) {
  if (spec.family != Family::A) throw std::invalid_argument("macmahon_A: spec.family must be A");
  return family_dp(spec, [](int lambda) { return lambda; });
}

TruncatedSeries macmahon_C(const SeriesSpec& spec) {
  if (spec.family != Family::C) throw std::invalid_argument("macmahon_C: spec.family must be C");
  return family_dp(spec, [](int lambda) { return 2 * lambda - 1; });
}

TruncatedSeries macmahon_series(const SeriesSpec& spec) {
  return spec.family == Family::A ? macmahon_A(spec) : macmahon_C(spec);
}

bool is_series_identity(std::string_view id) {
  return id == "ar-1" || id == "ar-2" || id == "os-1" || id == "os-2" || id == "a-1" ||
         id == "a-2" || id == "a-3" || id == "a-4" || id == "m-1" || id == "m-2" ||
         id == "m-3" || id == "m-4" || id == "t3-a" || id == "t3-c";
}

TruncatedSeries build_side(std::string_view id, Side side, const SideParams& p) {
  validate_params(id, p);
  const int k = p.k;
  const int order = p.order;
  const Sign sg = p.sign;
  const bool lhs = side == Side::Lhs;

  if (id == "ar-1") {
    if (lhs) return family_series(Family::A, Sign::Plus, k, std::nullopt, order);
    return mul(invert(pow(pochhammer_infinite(Sign::Plus, 1, 1, order), 3)), theta_sum_A(k, order));
  }

  if (id == "ar-2") {
    if (lhs) return family_series(Family::C, Sign::Plus, k, std::nullopt, order);
    TruncatedSeries overpartition_gf = mul(pochhammer_infinite(Sign::Minus, 1, 1, order),
                                           invert(pochhammer_infinite(Sign::Plus, 1, 1, order)));
    return mul(overpartition_gf, theta_sum_C(k, order));
  }

  if (id == "os-1") {
    // Both sides carry the q^(k(k+1)/2) factor, keeping exponents non-negative.
    if (lhs) {
      return mul(TruncatedSeries::monomial(Int(1), static_cast<int>(triangular(k)), order),
                 invert(pow(pochhammer_infinite(Sign::Plus, 1, 1, order), 3)));
    }
    TruncatedSeries s = TruncatedSeries::zero(order);
    for (int m = k; triangular(m) <= order; ++m) {  // A_m^+ starts at q^(m(m+1)/2)
      s = add(s, scale(family_series(Family::A, Sign::Plus, m, std::nullopt, order),
                       binomial(2 * m + 1, m + k + 1)));
    }
    return s;
  }

  if (id == "os-2") {
    if (lhs) {
      TruncatedSeries overpartition_gf = mul(pochhammer_infinite(Sign::Minus, 1, 1, order),
                                             invert(pochhammer_infinite(Sign::Plus, 1, 1, order)));
      return mul(TruncatedSeries::monomial(Int(1), k * k, order), overpartition_gf);
    }
    TruncatedSeries s = TruncatedSeries::zero(order);
    for (int m = k; static_cast<long long>(m) * m <= order; ++m) {  // C_m^+ starts at q^(m^2)
      s = add(s, scale(family_series(Family::C, Sign::Plus, m, std::nullopt, order),
                       binomial(2 * m, m + k)));
    }
    return s;
  }

  if (id == "m-3") {
    if (lhs) return family_series(Family::A, sg, k, std::nullopt, order);
    return mul(invert(pow(pochhammer_infinite(sg, 1, 1, order), 2)),
               distinct_pair_sum(Family::A, k, -unit(sg), order));
  }

  if (id == "m-4") {
    if (lhs) return family_series(Family::C, sg, k, std::nullopt, order);
    return mul(invert(pow(pochhammer_infinite(sg, 1, 2, order), 2)),
               distinct_pair_sum(Family::C, k, -unit(sg), order));
  }

  if (id == "t3-a") {
    if (lhs) return mul(invert(pochhammer_infinite(Sign::Plus, 1, 1, order)), theta_sum_A(k, order));
    return distinct_pair_sum(Family::A, k, -1, order);
  }

  if (id == "t3-c") {
    if (lhs) return mul(invert(pochhammer_infinite(Sign::Plus, 2, 2, order)), theta_sum_C(k, order));
    return distinct_pair_sum(Family::C, k, -1, order);
  }

  const int m = *p.m;

  if (id == "a-1") {
    if (lhs) return a1_binomial_combination(k, m, order);
    return mul(invert(pow(pochhammer_finite(Sign::Plus, 1, 1, m, order), 2)),
               shifted_q_binomial(static_cast<int>(triangular(k)), 2 * m + 1, m + k + 1, 1, order));
  }

  if (id == "a-2") {
    if (lhs) return a2_binomial_combination(sg, k, m, order);
    return mul(invert(pow(pochhammer_finite(sg, 1, 2, m, order), 2)),
               shifted_q_binomial(k * k, 2 * m, m + k, 2, order));
  }

  if (id == "a-3") {
    if (lhs) return family_series(Family::A, Sign::Plus, k, m, order);
    return mul(invert(pow(pochhammer_finite(Sign::Plus, 1, 1, m, order), 2)),
               a3_expansion_sum(k, m, order));
  }

  if (id == "a-4") {
    if (lhs) return family_series(Family::C, sg, k, m, order);
    return mul(invert(pow(pochhammer_finite(sg, 1, 2, m, order), 2)),
               a4_expansion_sum(sg, k, m, order));
  }

  if (id == "m-1") {
    if (lhs) return family_series(Family::A, sg, k, m, order);
    return mul(invert(pow(pochhammer_finite(sg, 1, 1, m, order), 2)),
               binomial_pair_sum(Family::A, k, m, -unit(sg), order));
  }

  if (id == "m-2") {
    if (lhs) return family_series(Family::C, sg, k, m, order);
    return mul(invert(pow(pochhammer_finite(sg, 1, 2, m, order), 2)),
               binomial_pair_sum(Family::C, k, m, -unit(sg), order));
  }

  throw std::invalid_argument("build_side: unknown identity id '" + std::string(id) + "'");
}

std::optional<TruncatedSeries> build_side_cleared(std::string_view id, Side side,
                                                  const SideParams& p) {
  if (id != "a-1" && id != "a-2" && id != "a-3" && id != "a-4" && id != "m-1" && id != "m-2")
    return std::nullopt;
  validate_params(id, p);
  const int k = p.k;
  const int m = *p.m;
  const int order = p.order;
  const Sign sg = p.sign;

  // Multiply both sides by the Pochhammer square; the side that carried its
  // inverse is rebuilt as the bare sum, so the cleared comparison involves
  // no inversion at all.
  auto square = [&](Sign s, int step) {
    return pow(pochhammer_finite(s, 1, step, m, order), 2);
  };

  if (id == "a-1") {
    if (side == Side::Lhs) return mul(square(Sign::Plus, 1), a1_binomial_combination(k, m, order));
    return shifted_q_binomial(static_cast<int>(triangular(k)), 2 * m + 1, m + k + 1, 1, order);
  }
  if (id == "a-2") {
    if (side == Side::Lhs) return mul(square(sg, 2), a2_binomial_combination(sg, k, m, order));
    return shifted_q_binomial(k * k, 2 * m, m + k, 2, order);
  }
  if (id == "a-3") {
    if (side == Side::Lhs)
      return mul(square(Sign::Plus, 1), family_series(Family::A, Sign::Plus, k, m, order));
    return a3_expansion_sum(k, m, order);
  }
  if (id == "a-4") {
    if (side == Side::Lhs) return mul(square(sg, 2), family_series(Family::C, sg, k, m, order));
    return a4_expansion_sum(sg, k, m, order);
  }
  if (id == "m-1") {
    if (side == Side::Lhs) return mul(square(sg, 1), family_series(Family::A, sg, k, m, order));
    return binomial_pair_sum(Family::A, k, m, -unit(sg), order);
  }
  // m-2
  if (side == Side::Lhs) return mul(square(sg, 2), family_series(Family::C, sg, k, m, order));
  return binomial_pair_sum(Family::C, k, m, -unit(sg), order);
}

}  // namespace qmac
