#include "qmac/identities.hpp"

#include <algorithm>
#include <chrono>

namespace qmac {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void push_param(IdentityReport& r, const char* key, std::string value) {
  r.params.emplace_back(key, std::move(value));
}

// (j-i)/k * C(j-i+k-1, 2k-1), exact.  Recomputed here from plain binomials
// so the combinatorial checks do not depend on the series builders.
Int pair_weight(int k, int i, int j) {
  return exact_div(Int(j - i) * binomial(j - i + k - 1, 2 * k - 1), Int(k));
}

Int signed_pow2(int e, bool negative) {
  Int v = int_pow2(e);
  return negative ? -v : v;
}

// sum_{l} (-2)^(l-k) C(l,k) P(m,l,n); terms with l < k vanish with C(l,k).
Int c10_lhs(int m, int k, int n) {
  Int s = 0;
  for (int l = k; l <= m; ++l) {
    Int c = binomial(l, k);
    if (c == 0) continue;
    s += signed_pow2(l - k, (l - k) % 2 != 0) * c * P_count(m, l, n);
  }
  return s;
}

Int c10_rhs(int m, int k, int n) {
  Int s = 0;
  for (int i = 0; i <= m - k; ++i) {
    for (int j = i + k; j <= m; ++j) {
      Int w = pair_weight(k, i, j);
      if ((j - i - k) % 2 != 0) w = -w;
      for (int t = 0; t <= m; ++t) {
        Int c = binomial(i + j - 2 * t, j - t);
        if (c == 0) continue;
        s += w * c * Q_count(m, i + j, t, n);
      }
    }
  }
  return s;
}

Int c14_lhs(int m, int l, int n) {
  Int s = 0;
  for (int t = 0; t <= m - l; ++t) s += Q_count(m, l + 2 * t, t, n);
  return s;
}

struct GridCheck {
  long long index;
  Int lhs;
  Int rhs;
};

IdentityReport sweep(IdentityReport report, long long from, long long to,
                     const std::function<GridCheck(long long)>& at) {
  report.pass = true;
  for (long long x = from; x <= to; ++x) {
    GridCheck g = at(x);
    if (g.lhs != g.rhs) {
      report.pass = false;
      report.first_mismatch = Mismatch{g.index, g.lhs, g.rhs};
      break;
    }
  }
  return report;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> registry = {
      {"ar-1", IdentityKind::Series, false, false, 0,
       "A_k^+ = (q;q)_inf^-3 sum_{n>=k} (-1)^(n-k) (2n+1)/(2k+1) C(n+k,2k) q^(n(n+1)/2)"},
      {"ar-2", IdentityKind::Series, false, false, 1,
       "C_k^+ = (-q;q)_inf (q;q)_inf^-1 sum_{n>=k} (-1)^(n-k) 2n/(n+k) C(n+k,2k) q^(n^2)"},
      {"os-1", IdentityKind::Series, false, false, 0,
       "q^(k(k+1)/2) (q;q)_inf^-3 = sum_{m>=k} C(2m+1,m+k+1) A_m^+"},
      {"os-2", IdentityKind::Series, false, false, 0,
       "q^(k^2) (-q;q)_inf (q;q)_inf^-1 = sum_{m>=k} C(2m,m+k) C_m^+"},
      {"a-1", IdentityKind::Series, false, true, 0,
       "sum_{j=k}^m C(2j+1,j+k+1) A_{j,m}^+ = q^(k(k+1)/2) (q;q)_m^-2 [2m+1,m+k+1]_q"},
      {"a-2", IdentityKind::Series, true, true, 0,
       "sum_{j=k}^m s^(j-k) C(2j,j+k) C_{j,m}^s = q^(k^2) (sq;q^2)_m^-2 [2m,m+k]_{q^2}"},
      {"a-3", IdentityKind::Series, false, true, 1,
       "A_{k,m}^+ = (q;q)_m^-2 sum_{j=k}^m (-1)^(j-k) (2j+1)/(2k+1) C(j+k,2k) [2m+1,m+j+1]_q q^(j(j+1)/2)"},
      {"a-4", IdentityKind::Series, true, true, 1,
       "C_{k,m}^s = (sq;q^2)_m^-2 sum_{j=k}^m (-s)^(j-k) 2j/(j+k) C(j+k,2k) [2m,m+j]_{q^2} q^(j^2)"},
      {"m-1", IdentityKind::Series, true, true, 1,
       "A_{k,m}^s = (sq;q)_m^-2 sum_{i,j} (-s)^(j-i-k) (j-i)/k C(j-i+k-1,2k-1) [m,i]_q [m,j]_q q^(T(i)+T(j))"},
      {"m-2", IdentityKind::Series, true, true, 1,
       "C_{k,m}^s = (sq;q^2)_m^-2 sum_{i,j} (-s)^(j-i-k) (j-i)/k C(j-i+k-1,2k-1) [m,i]_{q^2} [m,j]_{q^2} q^(i^2+j^2)"},
      {"m-3", IdentityKind::Series, true, false, 1,
       "A_k^s = (sq;q)_inf^-2 sum_{i,j} (-s)^(j-i-k) (j-i)/k C(j-i+k-1,2k-1) q^(T(i)+T(j)) / ((q;q)_i (q;q)_j)"},
      {"m-4", IdentityKind::Series, true, false, 1,
       "C_k^s = (sq;q^2)_inf^-2 sum_{i,j} (-s)^(j-i-k) (j-i)/k C(j-i+k-1,2k-1) q^(i^2+j^2) / ((q^2;q^2)_i (q^2;q^2)_j)"},
      {"t3-a", IdentityKind::Series, false, false, 1,
       "(q;q)_inf^-1 sum_n (-1)^(n-k) (2n+1)/(2k+1) C(n+k,2k) q^(T(n)) = the (q;q)_i (q;q)_j double sum"},
      {"t3-c", IdentityKind::Series, false, false, 1,
       "(q^2;q^2)_inf^-1 sum_n (-1)^(n-k) 2n/(n+k) C(n+k,2k) q^(n^2) = the (q^2;q^2)_i (q^2;q^2)_j double sum"},
      {"c-1", IdentityKind::Combinatorial, false, false, 1,
       "sum_{j=floor((k+a)/2)}^a ((-a+2j)/k) C(-a+2j+k-1,2k-1) C(a,j) = 2^(a-k) C(a,k)"},
      {"c-2", IdentityKind::Combinatorial, false, false, 1,
       "sum_{j=0}^a ((-a+2j)/k) C(-a+2j+k-1,2k-1) C(a,j) = 2^(a-k+1) C(a,k)"},
      {"c-10", IdentityKind::Combinatorial, false, true, 1,
       "sum_l (-2)^(l-k) C(l,k) P(m,l,n) = sum_{i,j,t} (-1)^(j-i-k) (j-i)/k C(j-i+k-1,2k-1) C(i+j-2t,j-t) Q(m,i+j,t,n)"},
      {"c-14", IdentityKind::Combinatorial, false, true, 0,
       "sum_{t=0}^{m-l} Q(m,l+2t,t,n) = P(m,l,n)"},
      {"zeil-rec", IdentityKind::Recurrence, false, false, 1,
       "(a-k) f_k(a) - 2a f_k(a-1) = 0 for the full-range sum f_k"},
  };
  return registry;
}

const IdentityInfo* find_identity(std::string_view id) {
  for (const IdentityInfo& info : identity_registry()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

std::optional<Mismatch> compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (lhs.order() != rhs.order())
    throw std::invalid_argument("compare_series: order mismatch");
  for (int n = 0; n <= lhs.order(); ++n) {
    if (lhs[n] != rhs[n]) return Mismatch{n, lhs[n], rhs[n]};
  }
  return std::nullopt;
}

namespace {

IdentityReport verify_series(const IdentityInfo& info, const VerifyParams& p) {
  if (!info.sign_dependent && p.sign != Sign::Plus)
    throw std::invalid_argument("verify: identity '" + info.id + "' is stated for the + family only");
  SideParams sp{p.k, p.m, p.sign, p.order};

  IdentityReport report;
  report.id = info.id;
  push_param(report, "k", std::to_string(p.k));
  if (info.finite_m) push_param(report, "m", std::to_string(p.m.value_or(-1)));
  if (info.sign_dependent) push_param(report, "sign", to_string(p.sign));
  report.range = "coeff 0.." + std::to_string(p.order);

  auto start = Clock::now();
  TruncatedSeries lhs = build_side(info.id, Side::Lhs, sp);
  TruncatedSeries rhs = build_side(info.id, Side::Rhs, sp);
  std::optional<Mismatch> mm = compare_series(lhs, rhs);
  if (!mm) {
    // Extra safeguard on the finite-m identities: the same comparison with
    // the Pochhammer square cleared, no inversion on either side.
    if (auto cl = build_side_cleared(info.id, Side::Lhs, sp)) {
      auto cr = build_side_cleared(info.id, Side::Rhs, sp);
      mm = compare_series(*cl, *cr);
    }
  }
  report.pass = !mm;
  report.first_mismatch = mm;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

IdentityReport verify_lemma(const IdentityInfo& info, const VerifyParams& p) {
  if (p.k < 1) throw std::invalid_argument("verify: k >= 1 required for '" + info.id + "'");
  const int a_max = p.a_max.value_or(40);
  const bool full_range = info.id == "c-2";
  const bool recurrence = info.id == "zeil-rec";
  const int a_min = recurrence ? 1 : 0;

  IdentityReport report;
  report.id = info.id;
  push_param(report, "k", std::to_string(p.k));
  report.range = "a " + std::to_string(a_min) + ".." + std::to_string(a_max);

  auto start = Clock::now();
  report = sweep(std::move(report), a_min, a_max, [&](long long a) -> GridCheck {
    int ai = static_cast<int>(a);
    if (recurrence) return {a, recurrence_residual(p.k, ai), Int(0)};
    if (full_range) return {a, lemma_full_sum(p.k, ai), lemma_full_rhs(p.k, ai)};
    return {a, lemma_lhs(p.k, ai), lemma_rhs(p.k, ai)};
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

IdentityReport verify_c10(const VerifyParams& p) {
  if (!p.m) throw std::invalid_argument("verify: c-10 requires m");
  if (p.k < 1) throw std::invalid_argument("verify: c-10 requires k >= 1");
  const int n_max = p.n_max.value_or(25);

  IdentityReport report;
  report.id = "c-10";
  push_param(report, "k", std::to_string(p.k));
  push_param(report, "m", std::to_string(*p.m));
  report.range = "n 0.." + std::to_string(n_max);

  auto start = Clock::now();
  report = sweep(std::move(report), 0, n_max, [&](long long n) -> GridCheck {
    int ni = static_cast<int>(n);
    return {n, c10_lhs(*p.m, p.k, ni), c10_rhs(*p.m, p.k, ni)};
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

IdentityReport verify_c14(const VerifyParams& p) {
  if (!p.m) throw std::invalid_argument("verify: c-14 requires m");
  if (!p.l || *p.l < 0 || *p.l > *p.m)
    throw std::invalid_argument("verify: c-14 requires 0 <= l <= m");
  const int n_max = p.n_max.value_or(25);

  IdentityReport report;
  report.id = "c-14";
  push_param(report, "l", std::to_string(*p.l));
  push_param(report, "m", std::to_string(*p.m));
  report.range = "n 0.." + std::to_string(n_max);

  auto start = Clock::now();
  report = sweep(std::move(report), 0, n_max, [&](long long n) -> GridCheck {
    int ni = static_cast<int>(n);
    return {n, c14_lhs(*p.m, *p.l, ni), P_count(*p.m, *p.l, ni)};
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace

IdentityReport verify(std::string_view id, const VerifyParams& params) {
  const IdentityInfo* info = find_identity(id);
  if (!info) throw UnknownIdentity("unknown identity: " + std::string(id));
  try {
    switch (info->kind) {
      case IdentityKind::Series:
        return verify_series(*info, params);
      case IdentityKind::Recurrence:
        return verify_lemma(*info, params);
      case IdentityKind::Combinatorial:
        if (info->id == "c-10") return verify_c10(params);
        if (info->id == "c-14") return verify_c14(params);
        return verify_lemma(*info, params);
    }
  } catch (const DivisibilityError& e) {
    // An inexact weight division falsifies the identity's integrality claim.
    IdentityReport report;
    report.id = info->id;
    push_param(report, "k", std::to_string(params.k));
    if (params.m) push_param(report, "m", std::to_string(*params.m));
    report.pass = false;
    report.note = e.what();
    return report;
  }
  throw std::logic_error("verify: unhandled identity kind");
}

std::vector<IdentityReport> verify_suite(int order, int max_k, int max_m) {
  if (order < 1) throw std::invalid_argument("verify_suite: order must be >= 1");
  std::vector<IdentityReport> reports;

  for (const IdentityInfo& info : identity_registry()) {
    if (info.kind == IdentityKind::Series) {
      for (int k = std::max(1, info.min_k); k <= max_k; ++k) {
        std::vector<Sign> signs = info.sign_dependent
                                      ? std::vector<Sign>{Sign::Plus, Sign::Minus}
                                      : std::vector<Sign>{Sign::Plus};
        for (Sign sign : signs) {
          if (info.finite_m) {
            for (int m = k; m <= max_m; ++m) {
              VerifyParams p;
              p.k = k;
              p.m = m;
              p.sign = sign;
              p.order = order;
              reports.push_back(verify(info.id, p));
            }
          } else {
            VerifyParams p;
            p.k = k;
            p.sign = sign;
            p.order = order;
            reports.push_back(verify(info.id, p));
          }
        }
      }
    } else if (info.id == "c-1" || info.id == "c-2" || info.id == "zeil-rec") {
      for (int k = 1; k <= 8; ++k) {
        VerifyParams p;
        p.k = k;
        p.a_max = 40;
        reports.push_back(verify(info.id, p));
      }
    } else if (info.id == "c-10") {
      for (int m = 1; m <= 6; ++m) {
        for (int k = 1; k <= 3; ++k) {
          VerifyParams p;
          p.k = k;
          p.m = m;
          p.n_max = 25;
          reports.push_back(verify(info.id, p));
        }
      }
    } else {  // c-14
      for (int m = 1; m <= 6; ++m) {
        for (int l = 0; l <= m; ++l) {
          VerifyParams p;
          p.l = l;
          p.m = m;
          p.n_max = 25;
          reports.push_back(verify(info.id, p));
        }
      }
    }
  }
  return reports;
}

IdentityReport limit_consistency(Family family, Sign sign, int k, int m, int order) {
  if (k < 1 || m < 1) throw std::invalid_argument("limit_consistency: k >= 1 and m >= 1 required");

  IdentityReport report;
  report.id = family == Family::A ? "limit-A" : "limit-C";
  push_param(report, "k", std::to_string(k));
  push_param(report, "m", std::to_string(m));
  push_param(report, "sign", to_string(sign));

  auto start = Clock::now();
  TruncatedSeries bounded = macmahon_series({family, sign, k, m, order});
  TruncatedSeries limit = macmahon_series({family, sign, k, std::nullopt, order});
  const int upto = std::min(family == Family::A ? m : 2 * m - 1, order);
  report.range = "coeff 0.." + std::to_string(upto);
  report.pass = true;
  for (int n = 0; n <= upto; ++n) {
    if (bounded[n] != limit[n]) {
      report.pass = false;
      report.first_mismatch = Mismatch{n, bounded[n], limit[n]};
      break;
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace qmac
