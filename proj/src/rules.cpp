#include "hs3/rules.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "hs3/errors.hpp"

namespace hs3 {

namespace {

constexpr std::array<std::string_view, kRuleCount> kNames = {
    "R1", "R2", "R3", "R4", "R5", "R6", "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "DONE_YES", "DONE_NO"};

int rank(RuleId r) { return static_cast<int>(r); }

/// Incidence and degree data for one hypergraph, built once per rule selection.
class Incidence {
 public:
  explicit Incidence(const Hypergraph& g) : g_(g), incident_(g.vertex_count()) {
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
      for (Vertex v : es[i]) incident_[index(v)].push_back(i);
    d_.resize(g.vertex_count());
    d2_.resize(g.vertex_count());
    for (std::size_t j = 0; j < incident_.size(); ++j) {
      d_[j] = incident_[j].size();
      for (std::size_t ei : incident_[j]) d2_[j] += es[ei].size() == 2;
    }
    for (std::size_t j = 0; j < d_.size(); ++j) {
      max_d_ = std::max(max_d_, d_[j]);
      max_d2_ = std::max(max_d2_, d2_[j]);
    }
  }

  const Hypergraph& graph() const { return g_; }
  std::size_t index(Vertex v) const {
    const auto& vs = g_.vertices();
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  }
  std::size_t d(Vertex v) const { return d_[index(v)]; }
  std::size_t d2(Vertex v) const { return d2_[index(v)]; }
  std::size_t d3(Vertex v) const {
    std::size_t n = 0;
    for (std::size_t ei : incident(v)) n += g_.edges()[ei].size() == 3;
    return n;
  }
  std::size_t max_d() const { return max_d_; }
  std::size_t max_d2() const { return max_d2_; }
  const std::vector<std::size_t>& incident(Vertex v) const { return incident_[index(v)]; }
  std::vector<Edge> edges_of(Vertex v) const {
    std::vector<Edge> out;
    for (std::size_t ei : incident(v)) out.push_back(g_.edges()[ei]);
    return out;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (std::size_t ei : incident(v))
      for (Vertex u : g_.edges()[ei])
        if (u != v) out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// I(v): some hyperedge avoiding v meets N(v) at least twice.
  int indicator(Vertex v) const {
    const auto nbrs = neighbors(v);
    for (const Edge& e : g_.edges()) {
      if (e.contains(v)) continue;
      std::size_t hits = 0;
      for (Vertex u : e) hits += std::binary_search(nbrs.begin(), nbrs.end(), u);
      if (hits >= 2) return 1;
    }
    return 0;
  }

  std::size_t D2(Vertex v) const {
    std::vector<Edge> own;
    for (std::size_t ei : incident(v))
      if (g_.edges()[ei].size() == 2) own.push_back(g_.edges()[ei]);
    std::size_t n = 0;
    for (const Edge& e : g_.edges()) {
      if (e.size() != 2) continue;
      if (e.contains(v) || std::any_of(own.begin(), own.end(), [&](const Edge& f) { return e.overlap(f) > 0; }))
        ++n;
    }
    return n;
  }

 private:
  const Hypergraph& g_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::size_t> d_;
  std::vector<std::size_t> d2_;
  std::size_t max_d_ = 0;
  std::size_t max_d2_ = 0;
};

RuleApplication make(RuleId r) {
  RuleApplication app;
  app.rule = r;
  return app;
}

Child child(std::vector<Op> ops) {
  Child c;
  c.k_delta = std::count_if(ops.begin(), ops.end(), [](const Op& op) { return op.sign == Sign::Take; });
  c.ops = std::move(ops);
  return c;
}

/// The two edges through a degree-2 vertex, in edge order.
std::pair<Edge, Edge> two_edges(const Incidence& inc, Vertex x) {
  auto es = inc.edges_of(x);
  return {es[0], es[1]};
}

std::vector<Vertex> others(const Edge& e, Vertex x) {
  std::vector<Vertex> out;
  for (Vertex u : e)
    if (u != x) out.push_back(u);
  return out;
}

// ---------------------------------------------------------------------------- reductions

std::optional<RuleApplication> rule_r1(const Hypergraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.size() != 1) continue;
    auto app = make(RuleId::R1);
    app.bindings = {{"x", e[0]}};
    app.children.push_back(child({take(e[0])}));
    return app;
  }
  return std::nullopt;
}

std::optional<RuleApplication> rule_r2(const Hypergraph& g) {
  if (is_simple(g)) return std::nullopt;
  auto app = make(RuleId::R2);
  Child c;
  c.replacement = minimalize(g);
  app.children.push_back(std::move(c));
  return app;
}

std::optional<RuleApplication> rule_r3(const Hypergraph& g) {
  for (const auto& block : components(g)) {
    if (block.size() < 2) continue;
    auto hs = small_hitting_set(restrict_to(g, block));
    if (!hs) continue;
    auto app = make(RuleId::R3);
    app.block = block;
    app.hitting_set = *hs;
    std::vector<Op> ops;
    for (Vertex s : *hs) ops.push_back(take(s));
    for (Vertex v : block)
      if (!std::binary_search(hs->begin(), hs->end(), v)) ops.push_back(discard(v));
    app.children.push_back(child(std::move(ops)));
    return app;
  }
  return std::nullopt;
}

std::optional<RuleApplication> rule_r4(const Hypergraph& g) {
  for (Vertex x : g.vertices()) {
    auto by = dominating_vertex(g, x);
    if (!by) continue;
    auto app = make(RuleId::R4);
    app.bindings = {{"x", x}, {"v", *by}};
    app.children.push_back(child({discard(x)}));
    return app;
  }
  return std::nullopt;
}

std::optional<RuleApplication> rule_r5(const Incidence& inc) {
  const auto& g = inc.graph();
  for (Vertex x : g.vertices()) {
    if (inc.d(x) != 2) continue;
    const auto nbrs = inc.neighbors(x);
    for (const Edge& e : g.edges()) {
      bool inside = std::all_of(e.begin(), e.end(),
                                [&](Vertex u) { return std::binary_search(nbrs.begin(), nbrs.end(), u); });
      if (!inside) continue;
      auto app = make(RuleId::R5);
      app.bindings = {{"x", x}};
      app.children.push_back(child({discard(x)}));
      return app;
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> rule_r6(const Incidence& inc) {
  const auto& g = inc.graph();
  for (Vertex x : g.vertices()) {
    const auto nbrs = inc.neighbors(x);
    std::optional<std::vector<Vertex>> common;  // intersection over the qualifying edges
    for (const Edge& e : g.edges()) {
      if (e.contains(x)) continue;
      bool meets = std::any_of(e.begin(), e.end(),
                               [&](Vertex u) { return std::binary_search(nbrs.begin(), nbrs.end(), u); });
      if (!meets) continue;
      if (!common) {
        common.emplace(e.begin(), e.end());
      } else {
        std::erase_if(*common, [&](Vertex u) { return !e.contains(u); });
      }
      if (common->empty()) break;
    }
    std::optional<Vertex> u;
    if (common) {
      if (!common->empty()) u = common->front();
    } else {
      // No qualifying hyperedge: the condition holds vacuously for any other vertex.
      for (Vertex w : g.vertices())
        if (w != x) {
          u = w;
          break;
        }
    }
    if (!u) continue;
    auto app = make(RuleId::R6);
    app.bindings = {{"x", x}, {"u", *u}};
    app.children.push_back(child({take(x)}));
    return app;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------- branching

std::optional<RuleApplication> rule_b1(const Incidence& inc) {
  if (inc.max_d2() != 2) return std::nullopt;
  const auto summary = two_section(inc.graph());
  for (const auto& comp : summary.components) {
    if (comp.size() != 4) continue;
    std::vector<Vertex> vs;
    for (const Edge& e : comp) vs.insert(vs.end(), e.begin(), e.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != 4) continue;
    const Vertex v1 = vs[0];
    std::vector<Vertex> adj;
    for (const Edge& e : comp)
      if (e.contains(v1)) adj.push_back(e[0] == v1 ? e[1] : e[0]);
    if (adj.size() != 2) continue;
    std::sort(adj.begin(), adj.end());
    const Vertex v2 = adj[0];
    const Vertex v4 = adj[1];
    Vertex v3 = v1;
    for (Vertex v : vs)
      if (v != v1 && v != v2 && v != v4) v3 = v;
    if (!inc.graph().has_edge(Edge{v2, v3}) || !inc.graph().has_edge(Edge{v3, v4})) continue;
    auto app = make(RuleId::B1);
    app.bindings = {{"v1", v1}, {"v2", v2}, {"v3", v3}, {"v4", v4}};
    app.children.push_back(child({take(v1), take(v3)}));
    app.children.push_back(child({take(v2), take(v4)}));
    return app;
  }
  return std::nullopt;
}

std::optional<RuleApplication> rule_b2(const Incidence& inc) {
  const std::size_t target = inc.max_d2();
  if (target != 1 && target != 2) return std::nullopt;
  for (Vertex x : inc.graph().vertices()) {
    if (inc.d2(x) != target || inc.d(x) != 2) continue;
    auto [e1, e2] = two_edges(inc, x);
    auto app = make(RuleId::B2);
    if (target == 2) {
      Vertex y = others(e1, x)[0];
      Vertex z = others(e2, x)[0];
      if (z < y) std::swap(y, z);
      app.variant = 1;
      app.bindings = {{"x", x}, {"y", y}, {"z", z}};
      app.children.push_back(child({take(x), discard(y), discard(z)}));
      app.children.push_back(child({discard(x), take(y), take(z)}));
    } else {
      if (e1.size() != 2) std::swap(e1, e2);
      if (e2.size() != 3) continue;  // a 1-hyperedge would have fired R1
      const Vertex y = others(e1, x)[0];
      const auto zw = others(e2, x);
      app.variant = 2;
      app.bindings = {{"x", x}, {"y", y}, {"z", zw[0]}, {"w", zw[1]}};
      app.children.push_back(child({take(x), discard(y), discard(zw[0]), discard(zw[1])}));
      app.children.push_back(child({discard(x), take(y)}));
    }
    return app;
  }
  return std::nullopt;
}

std::optional<RuleApplication> rule_b3(const Incidence& inc) {
  if (inc.max_d2() == 0) return std::nullopt;
  std::optional<Vertex> best;
  long best_score = 0;
  for (Vertex x : inc.graph().vertices()) {
    if (inc.d2(x) != inc.max_d2()) continue;
    long score = static_cast<long>(inc.d3(x)) - static_cast<long>(inc.D2(x));
    if (!best || score > best_score) {
      best = x;
      best_score = score;
    }
  }
  auto app = make(RuleId::B3);
  app.bindings = {{"x", *best}};
  app.children.push_back(child({take(*best)}));
  app.children.push_back(child({discard(*best)}));
  return app;
}

std::optional<RuleApplication> rule_b4(const Incidence& inc) {
  if (inc.max_d() != 4) return std::nullopt;
  const auto& g = inc.graph();
  for (Vertex x : g.vertices()) {
    for (Vertex y : inc.neighbors(x)) {
      if (y < x) continue;
      std::size_t shared = 0;
      for (std::size_t ei : inc.incident(x)) shared += g.edges()[ei].contains(y);
      if (shared < 3) continue;
      auto app = make(RuleId::B4);
      app.bindings = {{"x", x}, {"y", y}};
      app.children.push_back(child({take(x), discard(y)}));
      app.children.push_back(child({discard(x), take(y)}));
      app.children.push_back(child({discard(x), discard(y)}));
      return app;
    }
  }
  return std::nullopt;
}

/// Connected components of the B5 bipartite graph; nodes 0..|N|-1 are N(x), the rest are B.
std::vector<std::vector<std::size_t>> b5_components(const B5Structure& s) {
  const std::size_t n = s.neighborhood.size();
  const std::size_t total = n + s.sets.size();
  std::vector<std::vector<std::size_t>> adj(total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : s.adjacency[i]) {
      adj[i].push_back(n + j);
      adj[n + j].push_back(i);
    }
  std::vector<bool> seen(total, false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    comps.emplace_back();
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      comps.back().push_back(u);
      for (std::size_t w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

std::optional<RuleApplication> rule_b5(const Incidence& inc) {
  if (inc.max_d() > 4) return std::nullopt;
  const auto& g = inc.graph();
  for (Vertex x : g.vertices()) {
    if (inc.d(x) != 2 || inc.indicator(x) != 0) continue;
    auto [e1, e2] = two_edges(inc, x);
    if (e1.size() != 3 || e2.size() != 3) continue;
    const auto nbrs = inc.neighbors(x);
    if (!std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex p) { return inc.d(p) == 3; })) continue;
    const auto s = b5_structure(g, x);
    if (s.sets.size() != 4) continue;

    const auto yz = others(e1, x);
    const auto vw = others(e2, x);
    Vertex y = yz[0], z = yz[1], v = vw[0], w = vw[1];

    // Case 1: two disjoint 4-cycles, each holding one vertex of e1 - x and one of e2 - x.
    bool two_cycles = std::all_of(s.adjacency.begin(), s.adjacency.end(), [](const auto& a) { return a.size() == 2; }) &&
                      std::all_of(s.set_degree.begin(), s.set_degree.end(), [](std::size_t d) { return d == 2; });
    const auto comps = b5_components(s);
    two_cycles = two_cycles && comps.size() == 2 && comps[0].size() == 4 && comps[1].size() == 4;
    if (two_cycles) {
      for (const auto& comp : comps) {
        std::size_t from_e1 = 0, from_e2 = 0;
        for (std::size_t node : comp) {
          if (node >= s.neighborhood.size()) continue;
          Vertex p = s.neighborhood[node];
          from_e1 += p == y || p == z;
          from_e2 += p == v || p == w;
        }
        if (from_e1 != 1 || from_e2 != 1) two_cycles = false;
      }
    }

    auto app = make(RuleId::B5);
    if (two_cycles) {
      // Put the vertex of e2 that shares y's cycle in the `v` slot.
      const std::size_t iy = static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), y) - nbrs.begin());
      const std::size_t iv = static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), v) - nbrs.begin());
      const auto& cy = *std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
        return std::find(c.begin(), c.end(), iy) != c.end();
      });
      if (std::find(cy.begin(), cy.end(), iv) == cy.end()) std::swap(v, w);
      app.variant = 1;
      app.bindings = {{"x", x}, {"y", y}, {"z", z}, {"v", v}, {"w", w}};
      app.children.push_back(child({take(x), discard(y), discard(z), discard(v), discard(w)}));
      app.children.push_back(child({take(y), take(v), discard(x)}));
      app.children.push_back(child({take(z), take(w), discard(x)}));
    } else {
      app.variant = 2;
      app.bindings = {{"x", x}, {"y", y}, {"z", z}, {"v", v}, {"w", w}};
      app.children.push_back(child({take(x), discard(y), discard(z), discard(v), discard(w)}));
      app.children.push_back(child({take(y), take(z), take(v), take(w), discard(x)}));
    }
    return app;
  }
  return std::nullopt;
}

std::optional<RuleApplication> rule_b6(const Incidence& inc) {
  if (inc.max_d() > 4) return std::nullopt;
  std::optional<Vertex> best;
  int best_i = -1;
  for (Vertex x : inc.graph().vertices()) {
    if (inc.d(x) != 2) continue;
    int i = inc.indicator(x);
    if (i > best_i) {
      best = x;
      best_i = i;
    }
  }
  if (!best) return std::nullopt;
  const Vertex x = *best;
  auto [e1, e2] = two_edges(inc, x);
  std::vector<Op> first{take(x)};
  auto app = make(RuleId::B6);
  app.bindings = {{"x", x}};
  static constexpr std::array<std::array<const char*, 2>, 2> kSlots{{{"y", "z"}, {"v", "w"}}};
  std::size_t which = 0;
  for (const Edge* e : {&e1, &e2}) {
    const auto rest = others(*e, x);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      app.bindings.emplace_back(kSlots[which][i], rest[i]);
      first.push_back(discard(rest[i]));
    }
    ++which;
  }
  app.children.push_back(child(std::move(first)));
  app.children.push_back(child({discard(x)}));
  return app;
}

std::optional<RuleApplication> rule_b7(const Incidence& inc) {
  if (inc.max_d() > 3) return std::nullopt;
  const auto& g = inc.graph();
  std::vector<std::vector<Vertex>> with_edges;
  for (auto& block : components(g))
    if (std::any_of(block.begin(), block.end(), [&](Vertex v) { return inc.d(v) > 0; }))
      with_edges.push_back(std::move(block));
  if (with_edges.size() < 2) return std::nullopt;
  auto app = make(RuleId::B7);
  app.block = std::move(with_edges.front());
  return app;
}

RuleApplication rule_b8(const Incidence& inc) {
  const auto& g = inc.graph();
  std::optional<Vertex> best;
  std::size_t best_d2 = 0;
  for (Vertex u : g.vertices()) {
    if (inc.d(u) != inc.max_d()) continue;
    std::size_t score = max_degree2(minus(g, u));
    if (!best || score > best_d2) {
      best = u;
      best_d2 = score;
    }
  }
  auto app = make(RuleId::B8);
  app.bindings = {{"u", *best}};
  app.children.push_back(child({take(*best)}));
  app.children.push_back(child({discard(*best)}));
  return app;
}

}  // namespace

std::string_view rule_name(RuleId r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<RuleId>(i);
  return std::nullopt;
}

bool is_reduction(RuleId r) { return rank(r) <= rank(RuleId::R6); }

bool is_branching(RuleId r) { return rank(r) >= rank(RuleId::B1) && rank(r) <= rank(RuleId::B8); }

std::optional<Vertex> RuleApplication::binding(std::string_view name) const {
  for (const auto& [n, v] : bindings)
    if (n == name) return v;
  return std::nullopt;
}

Hypergraph child_graph(const Hypergraph& g, const Child& c) {
  if (c.replacement) return *c.replacement;
  return apply_seq(g, c.ops);
}

std::optional<std::vector<Vertex>> small_hitting_set(const Hypergraph& h) {
  const auto& es = h.edges();
  if (es.empty()) return std::vector<Vertex>{};

  // Four pairwise disjoint hyperedges already force a hitting set of size four.
  std::vector<Vertex> used;
  std::size_t packed = 0;
  for (const Edge& e : es) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex u) { return std::find(used.begin(), used.end(), u) != used.end(); }))
      continue;
    used.insert(used.end(), e.begin(), e.end());
    if (++packed == 4) return std::nullopt;
  }

  const auto& vs = h.vertices();
  const std::size_t n = vs.size();
  std::vector<std::array<std::size_t, 3>> local(es.size());
  std::vector<std::uint8_t> local_size(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    local_size[i] = static_cast<std::uint8_t>(es[i].size());
    for (std::size_t j = 0; j < es[i].size(); ++j)
      local[i][j] = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), es[i][j]) - vs.begin());
  }
  std::vector<char> chosen(n, 0);
  auto hits_all = [&] {
    for (std::size_t i = 0; i < es.size(); ++i) {
      bool hit = false;
      for (std::size_t j = 0; j < local_size[i]; ++j) hit = hit || chosen[local[i][j]];
      if (!hit) return false;
    }
    return true;
  };

  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t from, std::size_t left) -> bool {
    if (left == 0) return hits_all();
    for (std::size_t i = from; i + left <= n; ++i) {
      chosen[i] = 1;
      pick.push_back(i);
      if (search(i + 1, left - 1)) return true;
      pick.pop_back();
      chosen[i] = 0;
    }
    return false;
  };
  for (std::size_t size = 1; size <= 3 && size <= n; ++size) {
    if (search(0, size)) {
      std::vector<Vertex> out;
      for (std::size_t i : pick) out.push_back(vs[i]);
      return out;
    }
  }
  return std::nullopt;
}

B5Structure b5_structure(const Hypergraph& g, Vertex x) {
  B5Structure s;
  s.neighborhood = neighbors(g, x);
  const auto& nbrs = s.neighborhood;
  auto in_n = [&](Vertex u) { return std::binary_search(nbrs.begin(), nbrs.end(), u); };
  for (const Edge& e : g.edges()) {
    if (e.contains(x) || std::none_of(e.begin(), e.end(), in_n)) continue;
    std::vector<Vertex> rest;
    for (Vertex u : e)
      if (!in_n(u)) rest.push_back(u);
    // e subset of N(x) leaves nothing; R5 rules that out before B5 is reached.
    if (rest.empty()) continue;
    s.sets.emplace_back(std::span<const Vertex>(rest));
  }
  std::sort(s.sets.begin(), s.sets.end());
  s.sets.erase(std::unique(s.sets.begin(), s.sets.end()), s.sets.end());
  s.adjacency.resize(nbrs.size());
  s.set_degree.assign(s.sets.size(), 0);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = 0; j < s.sets.size(); ++j) {
      const Edge& b = s.sets[j];
      if (b.size() >= 3) continue;
      std::vector<Vertex> with(b.begin(), b.end());
      with.push_back(nbrs[i]);
      if (g.has_edge(Edge(std::span<const Vertex>(with)))) {
        s.adjacency[i].push_back(j);
        ++s.set_degree[j];
      }
    }
  }
  return s;
}

RuleApplication select_rule(const Instance& inst) {
  if (inst.k < 0) return make(RuleId::DoneNo);
  const Hypergraph& g = inst.graph;
  if (g.edgeless()) return make(RuleId::DoneYes);

  if (auto a = rule_r1(g)) return *a;
  if (auto a = rule_r2(g)) return *a;
  if (auto a = rule_r3(g)) return *a;
  if (auto a = rule_r4(g)) return *a;
  const Incidence inc(g);
  if (auto a = rule_r5(inc)) return *a;
  if (auto a = rule_r6(inc)) return *a;
  if (auto a = rule_b1(inc)) return *a;
  if (auto a = rule_b2(inc)) return *a;
  if (auto a = rule_b3(inc)) return *a;
  if (auto a = rule_b4(inc)) return *a;
  if (auto a = rule_b5(inc)) return *a;
  if (auto a = rule_b6(inc)) return *a;
  if (auto a = rule_b7(inc)) return *a;
  return rule_b8(inc);
}

std::vector<std::string> check_rule_claims(const Instance& inst, const RuleApplication& app) {
  std::vector<std::string> out;
  if (app.rule == RuleId::DoneNo || app.rule == RuleId::DoneYes) return out;
  const Hypergraph& g = inst.graph;
  const Incidence inc(g);
  const int r = rank(app.rule);
  auto report = [&](const std::string& claim, const std::string& detail) {
    out.push_back(claim + " at " + std::string(rule_name(app.rule)) + ": " + detail);
  };

  if (r >= rank(RuleId::R5)) {
    for (Vertex v : g.vertices()) {
      if (inc.d(v) == 1) report("no degree-1 vertex", "vertex " + std::to_string(v));
      if (inc.d(v) == 2) {
        auto [e1, e2] = two_edges(inc, v);
        if (e1.overlap(e2) != 1) report("degree-2 edges meet only in the vertex", "vertex " + std::to_string(v));
      }
    }
  }
  if (r >= rank(RuleId::B3) && inc.max_d2() > 0) {
    for (Vertex v : g.vertices())
      if (inc.d2(v) == inc.max_d2() && inc.d(v) < 3)
        report("max-d2 vertices have degree >= 3", "vertex " + std::to_string(v));
  }
  if (r >= rank(RuleId::B4)) {
    for (const Edge& e : g.edges())
      if (e.size() != 3) {
        report("all hyperedges have size 3", "edge of size " + std::to_string(e.size()));
        break;
      }
  }
  if (r >= rank(RuleId::B5) && inc.max_d() <= 4) {
    for (Vertex x : g.vertices())
      for (Vertex y : inc.neighbors(x)) {
        if (y < x) continue;
        std::size_t shared = 0;
        for (std::size_t ei : inc.incident(x)) shared += g.edges()[ei].contains(y);
        if (shared >= 3) report("pairs share at most two hyperedges", std::to_string(x) + "," + std::to_string(y));
      }
  }
  if (r >= rank(RuleId::B7) && inc.max_d() <= 4) {
    for (Vertex v : g.vertices())
      if (inc.d(v) > 0 && inc.d(v) < 3) report("minimum degree 3", "vertex " + std::to_string(v));
  }
  if (app.rule == RuleId::B5) {
    const auto s = b5_structure(g, *app.binding("x"));
    bool cycles = std::all_of(s.adjacency.begin(), s.adjacency.end(), [](const auto& a) { return a.size() == 2; }) &&
                  std::all_of(s.set_degree.begin(), s.set_degree.end(), [](std::size_t d) { return d == 2; });
    if (!cycles) report("B5 graph is a union of cycles", "vertex " + std::to_string(*app.binding("x")));
  }
  return out;
}

}  // namespace hs3
