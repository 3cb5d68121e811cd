#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qmac/qfunctions.hpp"
#include "qmac/series.hpp"

namespace qmac {

enum class Family { A, C };

inline const char* to_string(Family f) { return f == Family::A ? "A" : "C"; }

/// Descriptor of one named series: the sum over k strictly increasing part
/// indices lambda_1 < ... < lambda_k bounded by m (all indices when m is
/// absent, i.e. the m -> infinity limit), family A using parts lambda and
/// family C using odd parts 2*lambda - 1, each part weighted by
/// q^part / (1 -+ q^part)^2 with the family sign choosing -(Plus) or +(Minus)
/// in the denominator.
struct SeriesSpec {
  Family family = Family::A;
  Sign sign = Sign::Plus;
  int k = 0;
  std::optional<int> m;  // nullopt: the limit m -> infinity
  int order = 0;
};

/// Expansion of one part's weight q^p / (1 -+ q^p)^2: the coefficient of
/// q^(p*t) is t for Plus and (-1)^(t+1) * t for Minus, t >= 1.  This is the
/// per-part multiplicity weight that the series families sum over.
TruncatedSeries part_multiplicity_factor(int part, Sign sign, int order);

/// Sum over 1 <= lambda_1 < ... < lambda_k <= m of
/// q^(sum lambda_i) / prod (1 -+ q^(lambda_i))^2, truncated exactly.
/// k = 0 gives one(order); k > m (finite m) gives the empty sum, zero.
TruncatedSeries macmahon_A(const SeriesSpec& spec);

/// Same with odd parts 2*lambda_i - 1 and numerator q^(sum (2 lambda_i - 1)).
TruncatedSeries macmahon_C(const SeriesSpec& spec);

/// Dispatch on spec.family.
TruncatedSeries macmahon_series(const SeriesSpec& spec);

enum class Side { Lhs, Rhs };

struct SideParams {
  int k = 1;
  std::optional<int> m;  // required by the finite-m identities
  Sign sign = Sign::Plus;
  int order = 20;
};

/// Assemble one side of a registered series identity (ids ar-1, ar-2, os-1,
/// os-2, a-1..a-4, m-1..m-4, t3-a, t3-c) as an exact truncated series.
/// Infinite sums truncate at the first index whose minimal q-power exceeds
/// the order, which is exact.  Unknown id or missing/invalid parameters
/// throw std::invalid_argument.
///
/// Sign pairing, fixed after checking both candidates empirically: the
/// family sign s appears unchanged in the Pochhammer prefactors ((sq;q)_m,
/// (sq;q^2)_m and their limits) and negated in the inner alternating signs
/// ((-s)^(j-k) in a-4, (-s)^(j-i-k) in m-1..m-4), while a-2 carries the
/// plain (s)^(j-k).  The flipped prefactor pairing fails at (k,m) = (1,1)
/// and the flipped inner sign at (k,m) = (1,2); both are pinned by tests.
TruncatedSeries build_side(std::string_view identity_id, Side side, const SideParams& params);

/// Cleared-denominator variant with both sides multiplied by the finite
/// Pochhammer square, available for the finite-m binomial identities
/// (a-1..a-4, m-1, m-2); nullopt for the identities without a finite
/// prefactor to clear.
std::optional<TruncatedSeries> build_side_cleared(std::string_view identity_id, Side side,
                                                  const SideParams& params);

/// True for the ids build_side understands.
bool is_series_identity(std::string_view identity_id);

}  // namespace qmac
