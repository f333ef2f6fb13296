#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hs3/hypergraph.hpp"

namespace hs3 {

/// Rules in application order, followed by the two terminal outcomes.
enum class RuleId : std::uint8_t { R1, R2, R3, R4, R5, R6, B1, B2, B3, B4, B5, B6, B7, B8, DoneYes, DoneNo };

inline constexpr std::size_t kRuleCount = 16;

std::string_view rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);
bool is_reduction(RuleId r);
bool is_branching(RuleId r);

struct Instance {
  Hypergraph graph;
  long k = 0;
};

/// One child of a rule application: apply `ops` left to right and lower k by `k_delta`.
/// R2 is the only rule whose child is not an op sequence; it carries `replacement` instead.
struct Child {
  std::vector<Op> ops;
  long k_delta = 0;
  std::optional<Hypergraph> replacement;
};

struct RuleApplication {
  RuleId rule = RuleId::DoneYes;
  /// Named vertices, e.g. {"x", 3}, {"v1", 7}.
  std::vector<std::pair<std::string, Vertex>> bindings;
  /// Component H for R3 and B7.
  std::vector<Vertex> block;
  /// S_H for R3.
  std::vector<Vertex> hitting_set;
  /// Sub-case for B2 (1: d2(G)=2, 2: d2(G)=1) and B5 (1: two 4-cycles, 2: otherwise).
  int variant = 0;
  /// Empty for B7: the solver drives that rule itself.
  std::vector<Child> children;

  std::optional<Vertex> binding(std::string_view name) const;
};

/// Graph of a child; R2's replacement or the op sequence applied to `g`.
Hypergraph child_graph(const Hypergraph& g, const Child& c);

/// The first applicable rule for `inst`, or the terminal outcome. Total.
RuleApplication select_rule(const Instance& inst);

/// A minimum hitting set of `h` if one of size at most 3 exists. Subsets are scanned by
/// size, then lexicographically.
std::optional<std::vector<Vertex>> small_hitting_set(const Hypergraph& h);

/// The bipartite graph built by B5 around a degree-2 vertex x.
struct B5Structure {
  std::vector<Vertex> neighborhood;  // N(x), sorted
  std::vector<Edge> sets;            // B, sorted
  /// adjacency[i] lists indices into `sets` adjacent to neighborhood[i].
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::size_t> set_degree;
};
B5Structure b5_structure(const Hypergraph& g, Vertex x);

/// Structural facts that must hold whenever `app` is the rule select_rule picked for `inst`.
/// Returns one message per breach; empty when everything holds.
std::vector<std::string> check_rule_claims(const Instance& inst, const RuleApplication& app);

}  // namespace hs3
