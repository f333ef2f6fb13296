#include "hs3/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "hs3/errors.hpp"

namespace hs3 {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long to_long(std::string_view tok, std::size_t lineno) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(lineno, "not an integer: '" + std::string(tok) + "'");
  return v;
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::size_t lineno = 0;
  bool have_header = false;
  long n = 0, m = 0, k = 0;
  std::size_t seen = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;

    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(lineno, "second header line");
      if (tok.size() != 5 || tok[1] != "hs3") throw ParseError(lineno, "expected `p hs3 <n> <m> <k>`");
      n = to_long(tok[2], lineno);
      m = to_long(tok[3], lineno);
      k = to_long(tok[4], lineno);
      if (n < 0 || m < 0 || k < 0) throw ParseError(lineno, "header values must be non-negative");
      if (n > 1'000'000) throw ParseError(lineno, "n too large");
      have_header = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError(lineno, "edge before header");
      if (tok.size() < 2 || tok.size() > 4) throw ParseError(lineno, "an edge has 1 to 3 vertices");
      std::vector<Vertex> vs;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const long v = to_long(tok[i], lineno);
        if (v < 1 || v > n) throw ParseError(lineno, "vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
        vs.push_back(static_cast<Vertex>(v));
      }
      try {
        edges.emplace_back(std::span<const Vertex>(vs));
      } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
      }
      ++seen;
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (static_cast<long>(seen) != m)
    throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " + std::to_string(seen));

  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = static_cast<Vertex>(i + 1);
  return {Hypergraph(std::move(vertices), std::move(edges)), k};
}

std::string serialize_instance(const Instance& inst) {
  const auto& g = inst.graph;
  const Vertex n = g.vertices().empty() ? 0 : g.vertices().back();
  std::ostringstream os;
  os << "p hs3 " << n << ' ' << g.edge_count() << ' ' << inst.k << '\n';
  for (const Edge& e : g.edges()) {
    os << 'e';
    for (Vertex v : e) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

Instance generate(const GenConfig& cfg) {
  if (cfg.n < 0 || cfg.edge_count < 0) throw InputError("n and edge_count must be non-negative");
  if (cfg.p2 < 0 || cfg.p3 < 0 || std::abs(cfg.p2 + cfg.p3 - 1.0) > 1e-9)
    throw InputError("size probabilities must be non-negative and sum to 1");
  const std::uint64_t avail2 = cfg.p2 > 0 ? binom(cfg.n, 2) : 0;
  const std::uint64_t avail3 = cfg.p3 > 0 ? binom(cfg.n, 3) : 0;
  if (static_cast<std::uint64_t>(cfg.edge_count) > avail2 + avail3)
    throw InputError("cannot draw " + std::to_string(cfg.edge_count) + " distinct edges from " +
                     std::to_string(avail2 + avail3) + " available");

  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution pick2(cfg.p2);
  std::uniform_int_distribution<Vertex> vertex(1, std::max(cfg.n, 1));
  std::set<Edge> chosen;
  std::uint64_t taken2 = 0, taken3 = 0;
  while (chosen.size() < static_cast<std::size_t>(cfg.edge_count)) {
    std::size_t size = pick2(rng) ? 2 : 3;
    // Once one size is exhausted, draw the other.
    if (size == 2 && taken2 == avail2) size = 3;
    if (size == 3 && taken3 == avail3) size = 2;
    std::vector<Vertex> vs;
    while (vs.size() < size) {
      const Vertex v = vertex(rng);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    if (chosen.insert(Edge(std::span<const Vertex>(vs))).second) ++(size == 2 ? taken2 : taken3);
  }

  std::vector<Vertex> vertices;
  for (int i = 1; i <= cfg.n; ++i) vertices.push_back(i);
  const long k = cfg.k >= 0 ? cfg.k : cfg.n / 2;
  return {Hypergraph(std::move(vertices), {chosen.begin(), chosen.end()}), k};
}

}  // namespace hs3
