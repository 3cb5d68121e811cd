#include "qmac/oracles.hpp"

#include <algorithm>
#include <string>

namespace qmac {

long long PartitionMultiset::weight() const {
  long long w = 0;
  for (auto [value, mult] : parts) w += static_cast<long long>(value) * mult;
  return w;
}

int PartitionMultiset::total_part_count() const {
  int c = 0;
  for (auto [value, mult] : parts) c += mult;
  return c;
}

int PartitionMultiset::count_with_multiplicity(int mult) const {
  int c = 0;
  for (auto [value, m] : parts) c += (m == mult) ? 1 : 0;
  return c;
}

int DecompositionA::ones_count() const {
  return static_cast<int>(std::count(alpha_multipliers.begin(), alpha_multipliers.end(), 1));
}

namespace {

void check_guard(int n, int guard, const char* op) {
  if (n < 0) throw std::invalid_argument(std::string(op) + ": negative n");
  if (n > guard) {
    throw std::invalid_argument(std::string(op) + ": n = " + std::to_string(n) +
                                " exceeds the brute-force guard (" + std::to_string(guard) +
                                "); pass a larger guard to override");
  }
}

struct Enumerator {
  const PartitionConstraints& cons;
  const std::function<void(const PartitionMultiset&)>& visit;
  PartitionMultiset current;

  void run(int remaining, int max_value) {
    if (remaining == 0) {
      if (!cons.distinct_sizes || current.distinct_size_count() == *cons.distinct_sizes)
        visit(current);
      return;
    }
    if (cons.distinct_sizes && current.distinct_size_count() >= *cons.distinct_sizes &&
        remaining > 0)
      return;
    for (int value = std::min(remaining, max_value); value >= 1; --value) {
      if (cons.odd_parts_only && value % 2 == 0) continue;
      int mult_cap = remaining / value;
      if (cons.max_multiplicity) mult_cap = std::min(mult_cap, *cons.max_multiplicity);
      for (int mult = 1; mult <= mult_cap; ++mult) {
        current.parts[value] = mult;
        run(remaining - value * mult, value - 1);
      }
      current.parts.erase(value);
    }
  }
};

void validate_partition(const PartitionMultiset& p) {
  for (auto [value, mult] : p.parts) {
    if (value < 1 || mult < 1)
      throw std::invalid_argument("PartitionMultiset: non-positive part or multiplicity");
  }
}

// All size-r subsets of values (given ascending), in lexicographic order.
void for_each_subset(const std::vector<int>& values, int r,
                     const std::function<void(const std::vector<int>&)>& visit) {
  if (r < 0 || r > static_cast<int>(values.size())) return;
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(r));
  auto rec = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(chosen.size()) == r) {
      visit(chosen);
      return;
    }
    size_t needed = static_cast<size_t>(r) - chosen.size();
    for (size_t i = from; i + needed <= values.size(); ++i) {
      chosen.push_back(values[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

void for_each_partition(int n, const PartitionConstraints& constraints,
                        const std::function<void(const PartitionMultiset&)>& visit, int guard) {
  check_guard(n, guard, "for_each_partition");
  if (constraints.max_part && *constraints.max_part < 0)
    throw std::invalid_argument("for_each_partition: negative max_part");
  Enumerator e{constraints, visit, {}};
  int max_value = constraints.max_part ? std::min(*constraints.max_part, n) : n;
  if (n == 0) {
    e.run(0, 0);
    return;
  }
  e.run(n, max_value);
}

std::vector<PartitionMultiset> enumerate_partitions(int n, const PartitionConstraints& constraints,
                                                    int guard) {
  std::vector<PartitionMultiset> out;
  for_each_partition(n, constraints, [&](const PartitionMultiset& p) { out.push_back(p); }, guard);
  return out;
}

namespace {

Int signed_multiplicity_weight(Sign sign, int k, const PartitionMultiset& p) {
  Int w = 1;
  long long mult_sum = 0;
  for (auto [value, mult] : p.parts) {
    w *= mult;
    mult_sum += mult;
  }
  if (sign == Sign::Minus && (mult_sum + k) % 2 != 0) w = -w;
  return w;
}

}  // namespace

Int a_stat(Sign sign, int k, int n, int guard) {
  if (k < 1) throw std::invalid_argument("a_stat: k must be >= 1");
  check_guard(n, guard, "a_stat");
  Int total = 0;
  PartitionConstraints cons;
  cons.distinct_sizes = k;
  for_each_partition(n, cons,
                     [&](const PartitionMultiset& p) { total += signed_multiplicity_weight(sign, k, p); },
                     guard);
  return total;
}

Int c_stat(Sign sign, int k, int n, int guard) {
  if (k < 1) throw std::invalid_argument("c_stat: k must be >= 1");
  check_guard(n, guard, "c_stat");
  Int total = 0;
  PartitionConstraints cons;
  cons.distinct_sizes = k;
  cons.odd_parts_only = true;
  for_each_partition(n, cons,
                     [&](const PartitionMultiset& p) { total += signed_multiplicity_weight(sign, k, p); },
                     guard);
  return total;
}

Int p3(int n, int guard) {
  check_guard(n, guard, "p3");
  Int total = 0;
  for_each_partition(n, {}, [&](const PartitionMultiset& p) {
    Int colorings = 1;
    for (auto [value, mult] : p.parts) colorings *= binomial(mult + 2, 2);
    total += colorings;
  }, guard);
  return total;
}

Int overpartition_count(int n, int guard) {
  check_guard(n, guard, "overpartition_count");
  Int total = 0;
  for_each_partition(n, {}, [&](const PartitionMultiset& p) {
    total += int_pow2(p.distinct_size_count());
  }, guard);
  return total;
}

Int P_count(int m, int l, int n, int guard) {
  if (m < 0 || l < 0) throw std::invalid_argument("P_count: negative parameters");
  check_guard(n, guard, "P_count");
  Int total = 0;
  PartitionConstraints cons;
  cons.max_part = m;
  cons.max_multiplicity = 2;
  for_each_partition(n, cons, [&](const PartitionMultiset& p) {
    if (p.count_with_multiplicity(1) == l) ++total;
  }, guard);
  return total;
}

Int Q_count(int m, int s, int t, int n, int guard) {
  if (m < 0 || s < 0 || t < 0) throw std::invalid_argument("Q_count: negative parameters");
  check_guard(n, guard, "Q_count");
  Int total = 0;
  PartitionConstraints cons;
  cons.max_part = m;
  cons.max_multiplicity = 2;
  for_each_partition(n, cons, [&](const PartitionMultiset& p) {
    if (p.total_part_count() == s && p.count_with_multiplicity(2) == t) ++total;
  }, guard);
  return total;
}

std::vector<DecompositionA> decompositions_A(const PartitionMultiset& p, int m, int k) {
  validate_partition(p);
  if (k < 0) throw std::invalid_argument("decompositions_A: negative k");
  std::vector<int> singles, doubles;
  for (auto [value, mult] : p.parts) {
    if (value > m || mult > 2)
      throw std::invalid_argument("decompositions_A: partition outside the class (part > m or multiplicity > 2)");
    (mult == 1 ? singles : doubles).push_back(value);
  }

  // A value with multiplicity 2 cannot straddle the disjoint lambda/alpha
  // sets, so it is forced into alpha with multiplier 2; the k lambda slots
  // come from the multiplicity-1 values, C(l, k) choices.
  std::vector<DecompositionA> out;
  for_each_subset(singles, k, [&](const std::vector<int>& lambda) {
    DecompositionA d;
    d.lambda_parts = lambda;
    for (int v : singles) {
      if (!std::binary_search(lambda.begin(), lambda.end(), v)) {
        d.alpha_parts.push_back(v);
        d.alpha_multipliers.push_back(1);
      }
    }
    for (int v : doubles) {
      auto pos = std::lower_bound(d.alpha_parts.begin(), d.alpha_parts.end(), v);
      d.alpha_multipliers.insert(d.alpha_multipliers.begin() + (pos - d.alpha_parts.begin()), 2);
      d.alpha_parts.insert(pos, v);
    }
    out.push_back(std::move(d));
  });
  return out;
}

std::vector<SplitQ> enumerate_q_splits(const PartitionMultiset& p, int i, int j) {
  validate_partition(p);
  if (i < 0 || j < 0) throw std::invalid_argument("enumerate_q_splits: negative sizes");
  std::vector<int> singles, doubles;
  for (auto [value, mult] : p.parts) {
    if (mult > 2)
      throw std::invalid_argument("enumerate_q_splits: multiplicity exceeds 2");
    (mult == 1 ? singles : doubles).push_back(value);
  }
  std::vector<SplitQ> out;
  if (p.total_part_count() != i + j) return out;
  const int t = static_cast<int>(doubles.size());
  // Each doubled value lands once on each side; choose which singles join
  // the i-side.
  if (i < t || j < t) return out;
  for_each_subset(singles, i - t, [&](const std::vector<int>& chosen) {
    SplitQ s;
    s.lambda_parts = chosen;
    for (int v : doubles) s.lambda_parts.push_back(v);
    std::sort(s.lambda_parts.begin(), s.lambda_parts.end());
    for (int v : singles) {
      if (!std::binary_search(chosen.begin(), chosen.end(), v)) s.alpha_parts.push_back(v);
    }
    for (int v : doubles) s.alpha_parts.push_back(v);
    std::sort(s.alpha_parts.begin(), s.alpha_parts.end());
    out.push_back(std::move(s));
  });
  return out;
}

Int decompositions_Q(const PartitionMultiset& p, int i, int j) {
  return Int(enumerate_q_splits(p, i, j).size());
}

Int lemma_term(int k, int a, int j) {
  if (k < 1) throw std::invalid_argument("lemma_term: k must be >= 1");
  if (a < 0 || j < 0 || j > a) throw std::invalid_argument("lemma_term: j out of range");
  const int d = 2 * j - a;
  // d * C(d+k-1, 2k-1) is divisible by k; the binomial takes the generalized
  // meaning when d + k - 1 < 0 (full-range sums run the upper index negative).
  Int core = exact_div(Int(d) * binomial_signed(d + k - 1, 2 * k - 1), Int(k));
  return core * binomial(a, j);
}

Int lemma_lhs(int k, int a) {
  if (k < 1 || a < 0) throw std::invalid_argument("lemma_lhs: k >= 1 and a >= 0 required");
  Int s = 0;
  for (int j = (k + a) / 2; j <= a; ++j) s += lemma_term(k, a, j);
  return s;
}

Int lemma_rhs(int k, int a) {
  if (k < 1 || a < 0) throw std::invalid_argument("lemma_rhs: k >= 1 and a >= 0 required");
  if (k > a) return Int(0);
  return int_pow2(a - k) * binomial(a, k);
}

Int lemma_full_sum(int k, int a) {
  if (k < 1 || a < 0) throw std::invalid_argument("lemma_full_sum: k >= 1 and a >= 0 required");
  Int s = 0;
  for (int j = 0; j <= a; ++j) s += lemma_term(k, a, j);
  return s;
}

Int lemma_full_rhs(int k, int a) {
  if (k < 1 || a < 0) throw std::invalid_argument("lemma_full_rhs: k >= 1 and a >= 0 required");
  if (k > a) return Int(0);
  return int_pow2(a - k + 1) * binomial(a, k);
}

Int recurrence_residual(int k, int a) {
  if (k < 1 || a < 1) throw std::invalid_argument("recurrence_residual: k >= 1 and a >= 1 required");
  return Int(a - k) * lemma_full_sum(k, a) - Int(2 * a) * lemma_full_sum(k, a - 1);
}

}  // namespace qmac
