#include <doctest.h>

#include "hs3/oracle.hpp"
#include "support.hpp"

using namespace hs3;

namespace {

// Textbook recursion: pick an unhit edge, branch on its vertices.
std::size_t branch_min(const std::vector<Edge>& es, std::vector<Vertex>& chosen, std::size_t best) {
  const auto unhit = std::find_if(es.begin(), es.end(), [&](const Edge& e) {
    return std::none_of(e.begin(), e.end(), [&](Vertex v) { return std::find(chosen.begin(), chosen.end(), v) != chosen.end(); });
  });
  if (unhit == es.end()) return chosen.size();
  if (chosen.size() + 1 >= best) return best;
  for (Vertex v : *unhit) {
    chosen.push_back(v);
    best = std::min(best, branch_min(es, chosen, best));
    chosen.pop_back();
  }
  return best;
}

}  // namespace

TEST_CASE("oracle_min named cases") {
  CHECK(oracle_min(Hypergraph{}) == 0u);
  CHECK(oracle_min(Hypergraph::from_edges({{1, 2, 3}})) == 1u);
  std::vector<Edge> all;
  for (Vertex a = 1; a <= 5; ++a)
    for (Vertex b = a + 1; b <= 5; ++b)
      for (Vertex c = b + 1; c <= 5; ++c) all.push_back(Edge{a, b, c});
  CHECK(oracle_min(Hypergraph::from_edges(all)) == 3u);
  CHECK_FALSE(oracle_min(Hypergraph::from_edges(all), 2));
  CHECK(oracle_min(Hypergraph::from_edges({{1, 2}, {2, 3}, {1, 3}})) == 2u);
}

TEST_CASE("oracle_decide") {
  auto g = Hypergraph::from_edges({{1, 2}});
  CHECK_FALSE(oracle_decide(g, 0));
  CHECK(oracle_decide(g, 1));
  CHECK_FALSE(oracle_decide(g, -1));
  CHECK(oracle_decide(Hypergraph::from_edges({{1, 2}, {2, 3}, {1, 3}}), 2));
}

TEST_CASE("oracle agrees with a branching reference and is monotone") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 300; ++round) {
    const auto g = testing::random_mixed(4 + round % 10, 3 + round % 20, 0.5, rng);
    std::vector<Vertex> chosen;
    const auto opt = *oracle_min(g);
    CHECK(opt == branch_min(g.edges(), chosen, g.vertex_count() + 1));
    for (long k = 0; k <= static_cast<long>(opt) + 2; ++k) {
      CHECK(oracle_decide(g, k) == (k >= static_cast<long>(opt)));
      if (oracle_decide(g, k)) CHECK(oracle_decide(g, k + 1));
    }
    for (Vertex v : g.vertices()) CHECK(*oracle_min(plus(g, v)) + 1 >= opt);
  }
}
