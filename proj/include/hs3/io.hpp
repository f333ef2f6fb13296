#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hs3/rules.hpp"

namespace hs3 {

/// Reads the line format
///
///     c comment
///     p hs3 <n> <m> <k>
///     e v1 [v2 [v3]]
///
/// Vertices are 1..n. Exactly m edge lines must follow the header; duplicates collapse.
/// Throws ParseError with the offending line number.
Instance parse_instance(std::string_view text);
/// Inverse of parse_instance up to edge order. n is the largest vertex id.
std::string serialize_instance(const Instance& inst);
Instance read_instance(const std::string& path);

struct GenConfig {
  int n = 10;
  int edge_count = 15;
  double p2 = 0.5;
  double p3 = 0.5;
  std::uint64_t seed = 1;
  /// Budget written to the header; negative means n / 2.
  long k = -1;
};

/// Distinct uniform edges over {1..n} with sizes drawn from (p2, p3). Deterministic per seed.
/// Throws InputError on a bad distribution or when edge_count exceeds the edges available.
Instance generate(const GenConfig& cfg);

}  // namespace hs3
