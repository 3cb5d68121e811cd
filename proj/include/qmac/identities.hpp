#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmac/macmahon.hpp"
#include "qmac/oracles.hpp"

namespace qmac {

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class IdentityKind { Series, Combinatorial, Recurrence };

struct IdentityInfo {
  std::string id;
  IdentityKind kind;
  bool sign_dependent;  // verified for both signs
  bool finite_m;        // takes the truncation bound m as a parameter
  int min_k;
  std::string summary;
};

/// The full identity inventory, in fixed order.  Exactly these ids are
/// accepted by verify(); dropping or adding one is caught by a unit test.
const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo* find_identity(std::string_view id);

struct VerifyParams {
  int k = 1;
  std::optional<int> m;          // finite-m series identities
  Sign sign = Sign::Plus;
  int order = 20;                // series comparison order
  std::optional<int> l;          // c-14 multiplicity-one count
  std::optional<int> n_max;      // combinatorial sweep bound (default 25)
  std::optional<int> a_max;      // lemma sweep bound (default 40)
};

struct Mismatch {
  long long index = 0;  // coefficient index, or the n / a grid value
  Int lhs;
  Int rhs;
};

struct IdentityReport {
  std::string id;
  // Rendered deterministically, e.g. {"k","1"},{"m","2"},{"sign","plus"}.
  std::vector<std::pair<std::string, std::string>> params;
  std::string range;  // "coeff 0..50", "n 0..25" or "a 0..40"
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
  // Diagnostic for non-coefficient failures, e.g. a divisibility violation
  // surfaced from a builder (that falsifies an integrality claim, so it is
  // reported as a failure rather than escaping as an exception).
  std::string note;
  double elapsed_seconds = 0.0;
};

/// First differing coefficient of two equal-order series, if any.
std::optional<Mismatch> compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// Verify one identity at one grid point (series ids: fixed k/m/sign at
/// params.order; combinatorial ids: sweep n or a up to the bound).  Series
/// ids are checked in the printed quotient form and, where a finite
/// Pochhammer square can be cleared, in the cleared form as well.  Throws
/// UnknownIdentity for unregistered ids and std::invalid_argument for
/// parameters outside the identity's domain.
IdentityReport verify(std::string_view id, const VerifyParams& params);

/// Run every registered identity over its full grid: series ids over
/// k <= max_k (from each id's minimum, at least 1), m in [k, max_m] where
/// applicable, both signs where applicable, at the given order; the
/// combinatorial and recurrence ids over their standard grids (k <= 8,
/// a <= 40; n <= 25 with m <= 6).  Reports come back in deterministic order.
std::vector<IdentityReport> verify_suite(int order, int max_k, int max_m);

/// Prefix agreement of the bounded series with its limit: family A compares
/// coefficients 0..min(m, order), family C 0..min(2m-1, order).
IdentityReport limit_consistency(Family family, Sign sign, int k, int m, int order);

}  // namespace qmac
