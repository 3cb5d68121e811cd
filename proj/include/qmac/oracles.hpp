#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qmac/bigint.hpp"
#include "qmac/qfunctions.hpp"

namespace qmac {

/// A partition as a (part value -> multiplicity) map; both strictly
/// positive.  The enumeration oracles below are deliberately brute force and
/// independent of the series machinery, so they can stand as ground truth
/// against series coefficients.
struct PartitionMultiset {
  std::map<int, int> parts;

  long long weight() const;
  int distinct_size_count() const { return static_cast<int>(parts.size()); }
  int total_part_count() const;
  // Number of part values occurring with exactly the given multiplicity.
  int count_with_multiplicity(int mult) const;

  friend bool operator==(const PartitionMultiset&, const PartitionMultiset&) = default;
};

struct PartitionConstraints {
  std::optional<int> max_part;
  std::optional<int> max_multiplicity;
  std::optional<int> distinct_sizes;  // exact number of distinct part values
  bool odd_parts_only = false;
};

// Brute-force enumeration is exponential in n; calls above this bound are
// refused unless the caller raises the guard explicitly.
inline constexpr int kOracleSoftGuard = 40;

void for_each_partition(int n, const PartitionConstraints& constraints,
                        const std::function<void(const PartitionMultiset&)>& visit,
                        int guard = kOracleSoftGuard);

/// Exhaustive duplicate-free list; n = 0 yields the single empty partition.
std::vector<PartitionMultiset> enumerate_partitions(int n,
                                                    const PartitionConstraints& constraints = {},
                                                    int guard = kOracleSoftGuard);

/// Signed weighted count over partitions of n with exactly k distinct part
/// sizes: weight prod(t_i) for Plus, (-1)^(sum t_i + k) * prod(t_i) for
/// Minus.  c_stat restricts all part sizes to odd values.
Int a_stat(Sign sign, int k, int n, int guard = kOracleSoftGuard);
Int c_stat(Sign sign, int k, int n, int guard = kOracleSoftGuard);

/// Number of 3-colored partitions of n: each part value's t copies are
/// colored by a multiset of 3 colors, C(t+2, 2) choices per value.
Int p3(int n, int guard = kOracleSoftGuard);

/// Number of overpartitions of n: the first occurrence of each distinct part
/// may be overlined, 2^(distinct sizes) per partition.
Int overpartition_count(int n, int guard = kOracleSoftGuard);

/// #P(m, l, n): partitions of n with parts <= m, multiplicities <= 2, and
/// exactly l parts of multiplicity 1.
Int P_count(int m, int l, int n, int guard = kOracleSoftGuard);

/// #Q(m, s, t, n): parts <= m, multiplicities <= 2, total part count s,
/// exactly t values of multiplicity 2.
Int Q_count(int m, int s, int t, int n, int guard = kOracleSoftGuard);

/// One representation n = (lambda_1 + .. + lambda_k) + (x_1 alpha_1 + .. +
/// x_j alpha_j) with the lambda and alpha sets disjoint, strictly increasing,
/// bounded by m, and x_d in {1, 2}.
struct DecompositionA {
  std::vector<int> lambda_parts;       // ascending, size k
  std::vector<int> alpha_parts;        // ascending, size j
  std::vector<int> alpha_multipliers;  // aligned with alpha_parts, values 1 or 2

  int ones_count() const;  // number of multipliers equal to 1

  friend bool operator==(const DecompositionA&, const DecompositionA&) = default;
};

/// All such representations whose multiset of parts (lambda once, alpha_d
/// with multiplicity x_d) equals p.  p must have parts <= m and
/// multiplicities <= 2; there are exactly C(l, k) results where l is the
/// number of multiplicity-1 parts of p, and every result has
/// ones_count() == l - k.
std::vector<DecompositionA> decompositions_A(const PartitionMultiset& p, int m, int k);

/// One splitting of p into two strictly increasing sequences of sizes i and j.
struct SplitQ {
  std::vector<int> lambda_parts;  // ascending, size i
  std::vector<int> alpha_parts;   // ascending, size j

  friend bool operator==(const SplitQ&, const SplitQ&) = default;
};

/// All splittings of p (parts <= m not required here, multiplicities <= 2
/// are) into an i-set and a j-set of distinct parts; each multiplicity-2
/// value lands on both sides.  The count is C(i+j-2t, j-t) with t the number
/// of multiplicity-2 values.
std::vector<SplitQ> enumerate_q_splits(const PartitionMultiset& p, int i, int j);
Int decompositions_Q(const PartitionMultiset& p, int i, int j);

/// Summand C(k, a, j) = ((-a+2j)/k) * C(-a+2j+k-1, 2k-1) * C(a, j) of the
/// binomial-halving lemma, with the generalized binomial when the upper
/// index goes negative (required for the full-range sum; see tests).
/// The division by k is exact and checked.
Int lemma_term(int k, int a, int j);

/// Half-range sum_{j=floor((k+a)/2)}^{a} C(k,a,j) and its closed form
/// 2^(a-k) * C(a, k) (zero when k > a).
Int lemma_lhs(int k, int a);
Int lemma_rhs(int k, int a);

/// Full-range f_k(a) = sum_{j=0}^{a} C(k,a,j) and closed form
/// 2^(a-k+1) * C(a, k).
Int lemma_full_sum(int k, int a);
Int lemma_full_rhs(int k, int a);

/// (a-k) f_k(a) - 2a f_k(a-1); identically zero.  Requires a >= 1.
Int recurrence_residual(int k, int a);

}  // namespace qmac
