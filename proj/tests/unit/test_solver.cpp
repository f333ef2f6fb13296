#include <doctest.h>

#include <cmath>

#include "hs3/errors.hpp"
#include "hs3/io.hpp"
#include "hs3/oracle.hpp"
#include "hs3/solver.hpp"
#include "support.hpp"

using namespace hs3;

namespace {

void check_against_oracle(const Hypergraph& g, long slack_below = 2) {
  const long opt = static_cast<long>(*oracle_min(g));
  for (long k = std::max(0L, opt - slack_below); k <= opt + 1; ++k) {
    const auto r = solve({g, k});
    CHECK(r.decision == (k >= opt));
    CHECK(r.violations.empty());
    CHECK(r.max_b8_low_d_per_path <= 1);
    if (r.decision) {
      REQUIRE(r.certificate);
      CHECK(verify_hitting(g, *r.certificate));
      CHECK(static_cast<long>(r.certificate->size()) <= k);
    } else {
      CHECK_FALSE(r.certificate);
    }
    const auto full = solve({g, k}, {.full_tree = true});
    CHECK(full.decision == r.decision);
    CHECK(full.leaves >= r.leaves);
    CHECK(static_cast<double>(full.leaves) <= std::pow(2.0409, static_cast<double>(k + 15)));
  }
}

}  // namespace

TEST_CASE("named instances") {
  auto empty = solve({Hypergraph{}, 0});
  CHECK(empty.decision);
  CHECK(empty.certificate->empty());

  auto one = Hypergraph::from_edges({{1, 2, 3}});
  CHECK_FALSE(solve({one, 0}).decision);
  auto yes = solve({one, 1});
  CHECK(yes.decision);
  CHECK(yes.certificate->size() == 1);

  auto tri = Hypergraph::from_edges({{1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(solve({tri, 1}).decision);
  CHECK(solve({tri, 2}).decision);
  CHECK(solve({tri, -1}).count(RuleId::DoneNo) == 1);
}

TEST_CASE("verify_hitting") {
  auto g = Hypergraph::from_edges({{1, 2, 3}, {3, 4}});
  CHECK(verify_hitting(g, g.vertices()));
  CHECK_FALSE(verify_hitting(Hypergraph::from_edges({{1, 2, 3}}), std::vector<Vertex>{}));
  CHECK(verify_hitting(Hypergraph::from_edges({{1, 2}, {3, 4}}), std::vector<Vertex>{2, 3}));
}

TEST_CASE("solve_minimum equals the oracle") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 150; ++round) {
    const auto g = testing::random_mixed(4 + round % 10, 4 + round % 25, 0.5, rng);
    const auto res = solve_minimum(g);
    CHECK(res.k == static_cast<long>(*oracle_min(g)));
    CHECK(verify_hitting(g, res.certificate));
  }
}

TEST_CASE("differential: mixed sizes") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 400; ++round) {
    const int n = 4 + round % 12;
    check_against_oracle(testing::random_mixed(n, n + static_cast<int>(rng() % (2 * n + 1)), 0.5, rng));
  }
}

TEST_CASE("differential: low-degree 3-uniform, reaching B4..B8") {
  std::mt19937_64 rng(6);
  std::array<std::uint64_t, kRuleCount> counts{};
  for (int round = 0; round < 240; ++round) {
    const auto g = testing::capped_uniform(8 + round % 9, 3 + round % 2, rng);
    check_against_oracle(g);
    const auto r = solve({g, static_cast<long>(*oracle_min(g)) + 1}, {.full_tree = true});
    for (std::size_t i = 0; i < kRuleCount; ++i) counts[i] += r.rule_counts[i];
  }
  for (int round = 0; round < 30; ++round) {
    const auto g = testing::disjoint_union(testing::capped_uniform(10 + round % 3, 3, rng),
                                           testing::capped_uniform(10, 3, rng, 40));
    check_against_oracle(g, 1);
    const auto r = solve({g, static_cast<long>(*oracle_min(g))}, {.full_tree = true});
    for (std::size_t i = 0; i < kRuleCount; ++i) counts[i] += r.rule_counts[i];
  }
  for (RuleId rule : {RuleId::B4, RuleId::B6, RuleId::B7, RuleId::B8})
    CHECK_MESSAGE(counts[static_cast<std::size_t>(rule)] > 0, rule_name(rule));
}

TEST_CASE("B5 instances solve correctly") {
  for (const char* text :
       {"p hs3 13 14 0\ne 1 2 3\ne 1 4 5\ne 2 6 7\ne 2 8 9\ne 3 10 11\ne 3 12 13\ne 4 6 7\ne 4 8 9\ne 5 10 11\n"
        "e 5 12 13\ne 6 8 11\ne 7 9 13\ne 7 11 12\ne 9 10 13\n",
        "p hs3 13 14 0\ne 1 2 3\ne 1 4 5\ne 2 6 7\ne 2 12 13\ne 3 8 9\ne 3 10 11\ne 4 6 7\ne 4 8 9\ne 5 10 11\n"
        "e 5 12 13\ne 6 8 11\ne 7 9 13\ne 7 11 12\ne 9 10 13\n"}) {
    const auto g = parse_instance(text).graph;
    check_against_oracle(g);
    CHECK(solve({g, 6}, {.full_tree = true}).count(RuleId::B5) > 0);
  }
}

TEST_CASE("B7 recursion: inner loop bounds and leaves") {
  std::mt19937_64 rng(30);
  for (int round = 0; round < 60; ++round) {
    const auto g = normalize_isolated(
        testing::disjoint_union(testing::capped_uniform(10, 3, rng), testing::capped_uniform(10, 3, rng, 40)));
    if (select_rule({g, 0}).rule != RuleId::B7) continue;
    // With k < 8 the loop k' = 4..k-4 is empty: the node is a no-leaf.
    const auto r = solve({g, 7});
    CHECK_FALSE(r.decision);
    CHECK(r.leaves == 1);
    CHECK(r.count(RuleId::B7) == 1);
    const long opt = static_cast<long>(*oracle_min(g));
    CHECK(solve({g, opt}).decision);
    CHECK_FALSE(solve({g, opt - 1}).decision);
    return;
  }
  FAIL("no B7 instance produced");
}

TEST_CASE("certificate survives R2 replacements and R3 blocks") {
  auto g = Hypergraph::from_edges({{1, 2}, {1, 2, 3}, {4, 5}, {5, 6}, {4, 6}, {7, 8, 9}});
  const auto r = solve({g, 4});
  CHECK(r.decision);
  CHECK(verify_hitting(g, *r.certificate));
  CHECK(r.certificate->size() <= 4);
  CHECK(r.count(RuleId::R2) >= 1);
}

TEST_CASE("trace records reductions with R1 exhausted") {
  auto g = Hypergraph::from_edges({{1, 2}, {1, 3}, {2, 3, 4}, {4, 5, 6}, {5, 6, 7}, {6, 7, 8}, {1, 8, 9}});
  const auto r = solve({g, 4}, {.record_trace = true});
  std::size_t reductions = 0;
  for (std::size_t i = 0; i < 6; ++i) reductions += r.rule_counts[i];
  CHECK(r.trace.size() == reductions);
  for (const auto& s : r.trace) {
    CHECK(is_reduction(s.rule));
    CHECK(s.k_after <= s.k_before);
    CHECK(s.dhat_before >= 3);
    CHECK(s.dhat_before <= 6);
  }
}
