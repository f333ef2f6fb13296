#include "hs3/solver.hpp"

#include <algorithm>
#include <string>

#include "hs3/errors.hpp"

namespace hs3 {

namespace {

struct Outcome {
  bool yes = false;
  std::vector<Vertex> certificate;
};

struct PathState {
  std::size_t depth = 0;
  /// B8 applications seen since (and including) the first low-degree B8 on this path.
  std::size_t b8_since_low = 0;
};

std::size_t clamp_degree(const Hypergraph& g) { return std::clamp<std::size_t>(max_degree(g), 3, 6); }

class Search {
 public:
  Search(const SolveConfig& config, std::size_t depth_limit, SolveReport& report)
      : config_(config), depth_limit_(depth_limit), report_(report) {}

  Outcome run(const Hypergraph& g, long k, PathState path) {
    if (path.depth > depth_limit_)
      throw InvariantError("recursion depth " + std::to_string(path.depth) + " exceeds guard " +
                           std::to_string(depth_limit_));
    ++report_.nodes;
    const Instance inst{g, k};
    const RuleApplication app = select_rule(inst);
    ++report_.rule_counts[static_cast<std::size_t>(app.rule)];

    if (config_.check_invariants)
      for (auto& msg : check_rule_claims(inst, app)) report_.violations.push_back({app.rule, path.depth, std::move(msg)});

    switch (app.rule) {
      case RuleId::DoneNo:
        ++report_.leaves;
        return {};
      case RuleId::DoneYes:
        ++report_.leaves;
        return {true, {}};
      case RuleId::B7:
        return run_b7(g, k, app, path);
      default:
        break;
    }

    if (app.rule == RuleId::B8) note_b8(g, path);

    PathState next = path;
    // R2 removes no vertex and leaves k alone, so it does not consume depth budget.
    if (app.rule != RuleId::R2) ++next.depth;

    Outcome result;
    for (const Child& c : app.children) {
      Hypergraph cg = normalize_isolated(child_graph(g, c));
      const long ck = k - c.k_delta;
      if (config_.record_trace && is_reduction(app.rule)) record(app.rule, g, k, cg, ck);
      Outcome sub = run(cg, ck, next);
      if (sub.yes && !result.yes) {
        result.yes = true;
        result.certificate = std::move(sub.certificate);
        for (const Op& op : c.ops)
          if (op.sign == Sign::Take) result.certificate.push_back(op.vertex);
        if (!config_.full_tree) break;
      }
    }
    return result;
  }

 private:
  Outcome run_b7(const Hypergraph& g, long k, const RuleApplication& app, PathState path) {
    const Hypergraph h = restrict_to(g, app.block);
    const Hypergraph rest = remove_block(g, app.block);
    ++path.depth;
    for (long kk = 4; kk <= k - 4; ++kk) {
      Outcome inner = run(h, kk, path);
      if (!inner.yes) continue;
      Outcome outer = run(rest, k - kk, path);
      if (outer.yes)
        outer.certificate.insert(outer.certificate.end(), inner.certificate.begin(), inner.certificate.end());
      return outer;
    }
    // No inner call returned yes (possibly none ran): this node has no further children.
    if (k - 4 < 4) ++report_.leaves;
    return {};
  }

  void note_b8(const Hypergraph& g, PathState& path) {
    const bool low = max_degree(g) <= 3;
    if (low) report_.alpha_flag = 3;
    if (path.b8_since_low > 0 || low) ++path.b8_since_low;
    report_.max_b8_low_d_per_path = std::max(report_.max_b8_low_d_per_path, path.b8_since_low);
    if (config_.check_invariants && path.b8_since_low > 1)
      report_.violations.push_back(
          {RuleId::B8, path.depth, "B8 fired again below a B8 applied with d(G) <= 3"});
  }

  void record(RuleId rule, const Hypergraph& g, long k, Hypergraph after, long k_after) {
    ReductionStep step;
    step.rule = rule;
    step.dhat_before = clamp_degree(g);
    step.k_before = k;
    const auto before = two_section(g);
    step.m2_before = before.m2;
    step.c2_before = before.c2;
    for (bool again = true; again;) {
      again = false;
      for (const Edge& e : after.edges())
        if (e.size() == 1) {
          after = plus(after, e[0]);
          --k_after;
          again = true;
          break;
        }
    }
    const auto post = two_section(after);
    step.k_after = k_after;
    step.m2_after = post.m2;
    step.c2_after = post.c2;
    report_.trace.push_back(step);
  }

  const SolveConfig& config_;
  std::size_t depth_limit_;
  SolveReport& report_;
};

}  // namespace

SolveReport solve(const Instance& inst, const SolveConfig& config) {
  SolveReport report;
  const Hypergraph root = normalize_isolated(inst.graph);
  const std::size_t limit = static_cast<std::size_t>(std::max<long>(inst.k, 0)) + inst.graph.vertex_count() + 1;
  Search search(config, limit, report);
  Outcome out = search.run(root, inst.k, {});
  report.decision = out.yes;
  if (out.yes) {
    std::sort(out.certificate.begin(), out.certificate.end());
    out.certificate.erase(std::unique(out.certificate.begin(), out.certificate.end()), out.certificate.end());
    if (!verify_hitting(inst.graph, out.certificate) || static_cast<long>(out.certificate.size()) > inst.k)
      throw InvariantError("certificate does not verify against the input");
    report.certificate = std::move(out.certificate);
  }
  return report;
}

bool verify_hitting(const Hypergraph& g, std::span<const Vertex> s) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return std::any_of(e.begin(), e.end(), [&](Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); });
  });
}

MinimumResult solve_minimum(const Hypergraph& g) {
  for (long k = 0;; ++k) {
    auto report = solve({g, k}, {.check_invariants = false});
    if (report.decision) return {k, *report.certificate};
  }
}

}  // namespace hs3
