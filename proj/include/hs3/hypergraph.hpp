#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hs3 {

using Vertex = std::int32_t;

/// A hyperedge of at most three vertices, stored sorted.
///
/// Size 0 is representable so that G[-v] can detect (and report) the creation of an
/// empty hyperedge; a Hypergraph never holds one.
class Edge {
 public:
  Edge() = default;
  /// Sorts the input. Throws InputError on more than three vertices or a repeated vertex.
  Edge(std::initializer_list<Vertex> vs);
  explicit Edge(std::span<const Vertex> vs);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const Vertex* begin() const { return items_.data(); }
  const Vertex* end() const { return items_.data() + size_; }
  Vertex operator[](std::size_t i) const { return items_[i]; }

  bool contains(Vertex v) const;
  /// Copy without `v` (identity if `v` is absent).
  Edge without(Vertex v) const;
  /// Number of vertices shared with `other`.
  std::size_t overlap(const Edge& other) const;
  /// True iff every vertex of this edge is in `other` and the edges differ.
  bool strict_subset_of(const Edge& other) const;

  /// Lexicographic over the sorted vertex sequence; a proper prefix sorts first.
  std::strong_ordering operator<=>(const Edge& other) const;
  bool operator==(const Edge& other) const;

 private:
  std::array<Vertex, 3> items_{};
  std::uint8_t size_ = 0;
};

/// A 3-hypergraph: a sorted vertex set and a sorted set of hyperedges of size 1..3.
///
/// Values are immutable once built; every operation below returns a new hypergraph.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Canonicalizes (sorts, removes duplicates). Throws InputError when an edge is empty or
  /// mentions a vertex outside `vertices`, or when a vertex id is negative.
  Hypergraph(std::vector<Vertex> vertices, std::vector<Edge> edges);
  /// Vertex set is the union of the edges.
  static Hypergraph from_edges(std::initializer_list<std::initializer_list<Vertex>> edges);
  static Hypergraph from_edges(std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(Vertex v) const;
  bool has_edge(const Edge& e) const;
  bool edgeless() const { return edges_.empty(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool operator==(const Hypergraph&) const = default;

 private:
  // Skips validation; inputs must already be sorted and unique.
  friend struct HypergraphAccess;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

enum class Sign : std::uint8_t { Take, Discard };

/// One step of G[+v] (Take) or G[-v] (Discard).
struct Op {
  Sign sign;
  Vertex vertex;
  bool operator==(const Op&) const = default;
};

inline Op take(Vertex v) { return {Sign::Take, v}; }
inline Op discard(Vertex v) { return {Sign::Discard, v}; }

struct VertexStats {
  std::size_t d = 0;
  std::size_t d2 = 0;
  std::size_t d3 = 0;
  std::size_t D2 = 0;
  int I = 0;
  bool operator==(const VertexStats&) const = default;
};

struct TwoSectionSummary {
  std::size_t m2 = 0;
  std::size_t c2 = 0;
  std::size_t d2_max = 0;
  /// 2-hyperedges grouped by component of G^2, groups ordered by smallest vertex.
  std::vector<std::vector<Edge>> components;
};

/// G[+v]: delete v and every hyperedge containing it.
Hypergraph plus(const Hypergraph& g, Vertex v);
/// G[-v]: delete v from the vertex set and from every hyperedge. Duplicates collapse.
/// Throws InvariantError if a hyperedge becomes empty.
Hypergraph minus(const Hypergraph& g, Vertex v);
Hypergraph apply(const Hypergraph& g, Op op);
Hypergraph apply_seq(const Hypergraph& g, std::span<const Op> ops);

/// Vertices sharing a hyperedge with v (v excluded).
std::vector<Vertex> neighbors(const Hypergraph& g, Vertex v);
std::size_t degree(const Hypergraph& g, Vertex v);
VertexStats stats(const Hypergraph& g, Vertex v);
/// d(G); 0 for an edgeless graph.
std::size_t max_degree(const Hypergraph& g);
/// d_2(G).
std::size_t max_degree2(const Hypergraph& g);
std::size_t count_edges_of_size(const Hypergraph& g, std::size_t s);
std::vector<Edge> edges_of_size(const Hypergraph& g, std::size_t s);

TwoSectionSummary two_section(const Hypergraph& g);

/// Connected components (through shared hyperedges), each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Hypergraph& g);
/// Sub-hypergraph induced by a union of components.
Hypergraph restrict_to(const Hypergraph& g, std::span<const Vertex> block);
/// G - H for a union of components H.
Hypergraph remove_block(const Hypergraph& g, std::span<const Vertex> block);

/// Smallest v != x such that every hyperedge containing x also contains v.
std::optional<Vertex> dominating_vertex(const Hypergraph& g, Vertex x);

bool is_simple(const Hypergraph& g);
/// Keeps only the inclusion-minimal hyperedges.
Hypergraph minimalize(const Hypergraph& g);
/// Drops vertices that lie in no hyperedge.
Hypergraph normalize_isolated(const Hypergraph& g);
bool is_good(const Hypergraph& g);

struct TwoEdgeDiff {
  std::vector<Edge> removed;
  std::vector<Edge> added;
};

/// rem(G,G') = E2(G) \ E2(G') and add(G,G') = E2(G') \ E2(G).
TwoEdgeDiff diff_two_edges(const Hypergraph& before, const Hypergraph& after);

}  // namespace hs3
