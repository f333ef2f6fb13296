#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hs3/hypergraph.hpp"
#include "hs3/rules.hpp"

namespace hs3 {

struct SolveConfig {
  /// Explore every child of every branching rule instead of stopping at the first yes.
  /// Decisions and certificates are unchanged; leaf counts then match the full recursion tree.
  bool full_tree = false;
  /// Run check_rule_claims and the B8 path check at every node.
  bool check_invariants = true;
  /// Record one ReductionStep per reduction-rule application.
  bool record_trace = false;
};

/// m2/c2/k before and after a reduction, with 1-hyperedges exhausted afterwards.
struct ReductionStep {
  RuleId rule = RuleId::R1;
  std::size_t dhat_before = 3;
  long k_before = 0;
  std::size_t m2_before = 0;
  std::size_t c2_before = 0;
  long k_after = 0;
  std::size_t m2_after = 0;
  std::size_t c2_after = 0;
};

struct Violation {
  RuleId rule;
  std::size_t depth;
  std::string what;
};

struct SolveReport {
  bool decision = false;
  /// Present iff decision is yes; hits every hyperedge of the input and has size <= k.
  std::optional<std::vector<Vertex>> certificate;
  std::uint64_t leaves = 0;
  std::uint64_t nodes = 0;
  std::array<std::uint64_t, kRuleCount> rule_counts{};
  /// 3 if B8 fired on some instance with d(G) <= 3, else 0.
  int alpha_flag = 0;
  /// Largest number of B8 applications on one root-to-leaf path counted from the first
  /// B8 that fired on an instance with d(G) <= 3.
  std::size_t max_b8_low_d_per_path = 0;
  std::vector<Violation> violations;
  std::vector<ReductionStep> trace;

  std::uint64_t count(RuleId r) const { return rule_counts[static_cast<std::size_t>(r)]; }
};

/// Decide whether the hypergraph has a hitting set of at most k vertices.
/// Throws InvariantError on an internal breach: an empty hyperedge created mid-search, or
/// the depth guard tripping.
SolveReport solve(const Instance& inst, const SolveConfig& config = {});

bool verify_hitting(const Hypergraph& g, std::span<const Vertex> s);

/// Smallest k with a yes answer, found by calling solve for k = 0, 1, ...
struct MinimumResult {
  long k = 0;
  std::vector<Vertex> certificate;
};
MinimumResult solve_minimum(const Hypergraph& g);

}  // namespace hs3
