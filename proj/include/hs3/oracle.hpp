#pragma once

#include <optional>

#include "hs3/hypergraph.hpp"

namespace hs3 {

/// Exact minimum hitting-set size by exhaustive subset enumeration (sizes 0, 1, 2, ...).
/// Only vertices that lie in a hyperedge are enumerated. Returns nullopt when the minimum
/// exceeds `cap`. Throws InputError beyond 63 non-isolated vertices.
std::optional<std::size_t> oracle_min(const Hypergraph& g, std::optional<std::size_t> cap = std::nullopt);

/// k < 0 is always no.
bool oracle_decide(const Hypergraph& g, long k);

}  // namespace hs3
