#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hs3/measure.hpp"
#include "hs3/rules.hpp"

namespace hs3 {

struct FuzzConfig {
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  int min_n = 4;
  int max_n = 14;
  /// Probability that an edge has size 2; the rest have size 3.
  double p2 = 0.5;
  /// 0 reads HS3_THREADS, falling back to the hardware concurrency.
  unsigned threads = 0;
  /// Base of the leaf bound base^(k + 15).
  double leaf_base = 2.0409;
};

/// Case `index` of the suite seeded with `seed`: n in [min_n, max_n], between n and 3n
/// distinct edges of size 2 or 3.
Instance fuzz_case(const FuzzConfig& cfg, std::size_t index);

struct FuzzSummary {
  std::size_t cases = 0;
  std::size_t solves = 0;
  std::size_t yes = 0;
  std::size_t decision_mismatches = 0;
  std::size_t certificate_failures = 0;
  std::size_t leaf_bound_violations = 0;
  std::size_t invariant_violations = 0;
  std::size_t monotonicity_steps = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t max_b8_low_d_per_path = 0;
  std::uint64_t max_leaves = 0;
  std::array<std::uint64_t, kRuleCount> rule_counts{};
  /// Human-readable description of the first few failures, in case order.
  std::vector<std::string> failures;

  bool differential_ok() const { return decision_mismatches == 0; }
  bool ok() const {
    return decision_mismatches == 0 && certificate_failures == 0 && leaf_bound_violations == 0 &&
           invariant_violations == 0 && monotonicity_violations == 0;
  }
};

/// For each case and every k in [0, oracle_min + 1]: compare solve against the oracle,
/// verify certificates, bound the full-tree leaf count, collect invariant violations, and
/// check that mu does not grow across traced reductions (steps at the table's dhat).
FuzzSummary run_fuzz(const FuzzConfig& cfg, const PsiTable& table);

}  // namespace hs3
