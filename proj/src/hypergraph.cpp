#include "hs3/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hs3/errors.hpp"

namespace hs3 {

struct HypergraphAccess {
  static Hypergraph make(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    Hypergraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    return g;
  }
};

namespace {

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void require_vertex(const Hypergraph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
}

std::vector<Vertex> without_vertex(const std::vector<Vertex>& vs, Vertex v) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex u : vs)
    if (u != v) out.push_back(u);
  return out;
}

/// Small union-find over indices 0..n-1.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t index_of(const std::vector<Vertex>& sorted, Vertex v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

}  // namespace

// ---------------------------------------------------------------------------- Edge

Edge::Edge(std::initializer_list<Vertex> vs) : Edge(std::span<const Vertex>(vs.begin(), vs.size())) {}

Edge::Edge(std::span<const Vertex> vs) {
  if (vs.size() > 3) throw InputError("hyperedge has more than three vertices");
  std::copy(vs.begin(), vs.end(), items_.begin());
  size_ = static_cast<std::uint8_t>(vs.size());
  std::sort(items_.begin(), items_.begin() + size_);
  if (std::adjacent_find(begin(), end()) != end())
    throw InputError("hyperedge repeats a vertex");
}

bool Edge::contains(Vertex v) const { return std::find(begin(), end(), v) != end(); }

Edge Edge::without(Vertex v) const {
  Edge e;
  for (Vertex u : *this)
    if (u != v) e.items_[e.size_++] = u;
  return e;
}

std::size_t Edge::overlap(const Edge& other) const {
  std::size_t n = 0;
  for (Vertex u : *this) n += other.contains(u);
  return n;
}

bool Edge::strict_subset_of(const Edge& other) const {
  return size_ < other.size_ && overlap(other) == size_;
}

std::strong_ordering Edge::operator<=>(const Edge& other) const {
  return std::lexicographical_compare_three_way(begin(), end(), other.begin(), other.end());
}

bool Edge::operator==(const Edge& other) const { return std::equal(begin(), end(), other.begin(), other.end()); }

// ---------------------------------------------------------------------------- Hypergraph

Hypergraph::Hypergraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (!vertices_.empty() && vertices_.front() < 0) throw InputError("negative vertex id");
  sort_unique(edges_);
  for (const Edge& e : edges_) {
    if (e.empty()) throw InputError("empty hyperedge");
    for (Vertex v : e)
      if (!has_vertex(v)) throw InputError("hyperedge mentions unknown vertex " + std::to_string(v));
  }
}

Hypergraph Hypergraph::from_edges(std::initializer_list<std::initializer_list<Vertex>> edges) {
  std::vector<Edge> es;
  for (auto e : edges) es.emplace_back(e);
  return from_edges(std::move(es));
}

Hypergraph Hypergraph::from_edges(std::vector<Edge> edges) {
  std::vector<Vertex> vs;
  for (const Edge& e : edges) vs.insert(vs.end(), e.begin(), e.end());
  return Hypergraph(std::move(vs), std::move(edges));
}

bool Hypergraph::has_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Hypergraph::has_edge(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

// ---------------------------------------------------------------------------- operations

Hypergraph plus(const Hypergraph& g, Vertex v) {
  require_vertex(g, v);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    if (!e.contains(v)) edges.push_back(e);
  return HypergraphAccess::make(without_vertex(g.vertices(), v), std::move(edges));
}

Hypergraph minus(const Hypergraph& g, Vertex v) {
  require_vertex(g, v);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  bool changed = false;
  for (const Edge& e : g.edges()) {
    if (!e.contains(v)) {
      edges.push_back(e);
      continue;
    }
    Edge reduced = e.without(v);
    if (reduced.empty())
      throw InvariantError("G[-" + std::to_string(v) + "] creates an empty hyperedge");
    edges.push_back(reduced);
    changed = true;
  }
  if (changed) sort_unique(edges);
  return HypergraphAccess::make(without_vertex(g.vertices(), v), std::move(edges));
}

Hypergraph apply(const Hypergraph& g, Op op) {
  return op.sign == Sign::Take ? plus(g, op.vertex) : minus(g, op.vertex);
}

Hypergraph apply_seq(const Hypergraph& g, std::span<const Op> ops) {
  Hypergraph out = g;
  for (const Op& op : ops) out = apply(out, op);
  return out;
}

std::vector<Vertex> neighbors(const Hypergraph& g, Vertex v) {
  std::vector<Vertex> out;
  for (const Edge& e : g.edges())
    if (e.contains(v))
      for (Vertex u : e)
        if (u != v) out.push_back(u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t degree(const Hypergraph& g, Vertex v) {
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [v](const Edge& e) { return e.contains(v); }));
}

VertexStats stats(const Hypergraph& g, Vertex v) {
  require_vertex(g, v);
  VertexStats s;
  std::vector<Edge> own2;
  for (const Edge& e : g.edges()) {
    if (!e.contains(v)) continue;
    ++s.d;
    if (e.size() == 2) {
      ++s.d2;
      own2.push_back(e);
    } else if (e.size() == 3) {
      ++s.d3;
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.size() != 2) continue;
    bool counted = e.contains(v) ||
                   std::any_of(own2.begin(), own2.end(), [&](const Edge& f) { return e.overlap(f) > 0; });
    s.D2 += counted;
  }
  const auto nbrs = neighbors(g, v);
  for (const Edge& e : g.edges()) {
    if (e.contains(v)) continue;
    std::size_t hits = 0;
    for (Vertex u : e) hits += std::binary_search(nbrs.begin(), nbrs.end(), u);
    if (hits >= 2) {
      s.I = 1;
      break;
    }
  }
  return s;
}

std::size_t max_degree(const Hypergraph& g) {
  const auto& vs = g.vertices();
  std::vector<std::size_t> d(vs.size(), 0);
  for (const Edge& e : g.edges())
    for (Vertex u : e) ++d[index_of(vs, u)];
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::size_t max_degree2(const Hypergraph& g) {
  const auto& vs = g.vertices();
  std::vector<std::size_t> d(vs.size(), 0);
  for (const Edge& e : g.edges())
    if (e.size() == 2)
      for (Vertex u : e) ++d[index_of(vs, u)];
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::size_t count_edges_of_size(const Hypergraph& g, std::size_t s) {
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [s](const Edge& e) { return e.size() == s; }));
}

std::vector<Edge> edges_of_size(const Hypergraph& g, std::size_t s) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (e.size() == s) out.push_back(e);
  return out;
}

TwoSectionSummary two_section(const Hypergraph& g) {
  TwoSectionSummary out;
  const auto& vs = g.vertices();
  const auto two = edges_of_size(g, 2);
  out.m2 = two.size();
  out.d2_max = max_degree2(g);
  if (two.empty()) return out;

  DisjointSets sets(vs.size());
  for (const Edge& e : two) sets.unite(index_of(vs, e[0]), index_of(vs, e[1]));
  // Roots are the smallest index of their class, so ordering groups by root orders them
  // by smallest vertex.
  std::vector<std::size_t> roots;
  for (const Edge& e : two) roots.push_back(sets.find(index_of(vs, e[0])));
  std::vector<std::size_t> distinct = roots;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  out.c2 = distinct.size();
  out.components.resize(distinct.size());
  for (std::size_t i = 0; i < two.size(); ++i) {
    auto slot = std::lower_bound(distinct.begin(), distinct.end(), roots[i]) - distinct.begin();
    out.components[static_cast<std::size_t>(slot)].push_back(two[i]);
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const Hypergraph& g) {
  const auto& vs = g.vertices();
  DisjointSets sets(vs.size());
  for (const Edge& e : g.edges())
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(index_of(vs, e[0]), index_of(vs, e[i]));
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::size_t> slot_of_root(vs.size(), SIZE_MAX);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::size_t r = sets.find(i);
    if (slot_of_root[r] == SIZE_MAX) {
      slot_of_root[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot_of_root[r]].push_back(vs[i]);
  }
  return blocks;
}

Hypergraph restrict_to(const Hypergraph& g, std::span<const Vertex> block) {
  std::vector<Vertex> vs(block.begin(), block.end());
  std::sort(vs.begin(), vs.end());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (std::binary_search(vs.begin(), vs.end(), e[0])) edges.push_back(e);
  return HypergraphAccess::make(std::move(vs), std::move(edges));
}

Hypergraph remove_block(const Hypergraph& g, std::span<const Vertex> block) {
  std::vector<Vertex> drop(block.begin(), block.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices())
    if (!std::binary_search(drop.begin(), drop.end(), v)) vs.push_back(v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e[0])) edges.push_back(e);
  return HypergraphAccess::make(std::move(vs), std::move(edges));
}

std::optional<Vertex> dominating_vertex(const Hypergraph& g, Vertex x) {
  require_vertex(g, x);
  std::vector<Vertex> common;
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!e.contains(x)) continue;
    if (first) {
      common.assign(e.begin(), e.end());
      first = false;
    } else {
      std::erase_if(common, [&](Vertex u) { return !e.contains(u); });
    }
  }
  if (first) common = g.vertices();  // degree 0: dominated by anything
  for (Vertex v : common)
    if (v != x) return v;
  return std::nullopt;
}

bool is_simple(const Hypergraph& g) {
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j && es[i].strict_subset_of(es[j])) return false;
  return true;
}

Hypergraph minimalize(const Hypergraph& g) {
  const auto& es = g.edges();
  std::vector<Edge> kept;
  for (const Edge& e : es) {
    bool dominated = std::any_of(es.begin(), es.end(), [&](const Edge& f) { return f.strict_subset_of(e); });
    if (!dominated) kept.push_back(e);
  }
  return HypergraphAccess::make(g.vertices(), std::move(kept));
}

Hypergraph normalize_isolated(const Hypergraph& g) {
  std::vector<Vertex> used;
  for (const Edge& e : g.edges()) used.insert(used.end(), e.begin(), e.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (used.size() == g.vertex_count()) return g;
  return HypergraphAccess::make(std::move(used), g.edges());
}

bool is_good(const Hypergraph& g) {
  if (max_degree(g) > 3) return false;
  for (const auto& block : components(g)) {
    bool ok = false;
    for (Vertex v : block)
      if (degree(g, v) <= 2) ok = true;
    for (const Edge& e : g.edges())
      if (e.size() <= 2 && std::binary_search(block.begin(), block.end(), e[0])) ok = true;
    if (!ok) return false;
  }
  return true;
}

TwoEdgeDiff diff_two_edges(const Hypergraph& before, const Hypergraph& after) {
  const auto a = edges_of_size(before, 2);
  const auto b = edges_of_size(after, 2);
  TwoEdgeDiff out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.removed));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.added));
  return out;
}

}  // namespace hs3
