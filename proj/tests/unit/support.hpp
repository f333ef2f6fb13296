#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "hs3/hypergraph.hpp"

namespace hs3::testing {

/// Random 3-uniform hypergraph on {first..first+n-1} where no vertex exceeds degree `cap`.
inline Hypergraph capped_uniform(int n, int cap, std::mt19937_64& rng, Vertex first = 1) {
  std::vector<int> room(static_cast<std::size_t>(n), cap);
  std::set<Edge> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int attempt = 0; attempt < 40 * n; ++attempt) {
    std::array<int, 3> t{pick(rng), pick(rng), pick(rng)};
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
    if (room[t[0]] == 0 || room[t[1]] == 0 || room[t[2]] == 0) continue;
    Edge e{first + t[0], first + t[1], first + t[2]};
    if (!edges.insert(e).second) continue;
    for (int i : t) --room[i];
  }
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back(first + i);
  return Hypergraph(std::move(vs), {edges.begin(), edges.end()});
}

inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Vertex> vs = a.vertices();
  vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Edge> es = a.edges();
  es.insert(es.end(), b.edges().begin(), b.edges().end());
  return Hypergraph(std::move(vs), std::move(es));
}

/// Random hypergraph with edge sizes 1..3 where each edge has size 2 with probability p2.
inline Hypergraph random_mixed(int n, int m, double p2, std::mt19937_64& rng) {
  std::set<Edge> edges;
  std::uniform_int_distribution<Vertex> pick(1, n);
  std::bernoulli_distribution two(p2);
  for (int attempt = 0; attempt < 50 * m && static_cast<int>(edges.size()) < m; ++attempt) {
    const std::size_t size = two(rng) ? 2 : 3;
    std::vector<Vertex> vs;
    while (vs.size() < size) {
      Vertex v = pick(rng);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    edges.insert(Edge(std::span<const Vertex>(vs)));
  }
  std::vector<Vertex> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  return Hypergraph(std::move(vs), {edges.begin(), edges.end()});
}

}  // namespace hs3::testing
