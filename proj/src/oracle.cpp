#include "hs3/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hs3/errors.hpp"

namespace hs3 {

namespace {

/// Next bit pattern with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

}  // namespace

std::optional<std::size_t> oracle_min(const Hypergraph& g, std::optional<std::size_t> cap) {
  std::vector<Vertex> active;
  for (const Edge& e : g.edges()) active.insert(active.end(), e.begin(), e.end());
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  const std::size_t n = active.size();
  if (n > 63) throw InputError("oracle supports at most 63 non-isolated vertices");

  std::vector<std::uint64_t> masks;
  for (const Edge& e : g.edges()) {
    std::uint64_t m = 0;
    for (Vertex v : e)
      m |= std::uint64_t{1} << (std::lower_bound(active.begin(), active.end(), v) - active.begin());
    masks.push_back(m);
  }
  auto hits = [&](std::uint64_t s) {
    return std::all_of(masks.begin(), masks.end(), [s](std::uint64_t m) { return (m & s) != 0; });
  };

  const std::size_t limit = cap ? std::min(*cap, n) : n;
  if (hits(0)) return 0;
  for (std::size_t size = 1; size <= limit; ++size) {
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t s = (std::uint64_t{1} << size) - 1; s < end; s = next_combination(s))
      if (hits(s)) return size;
  }
  return std::nullopt;
}

bool oracle_decide(const Hypergraph& g, long k) {
  if (k < 0) return false;
  return oracle_min(g, static_cast<std::size_t>(k)).has_value();
}

}  // namespace hs3
