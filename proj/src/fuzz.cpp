#include "hs3/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "hs3/errors.hpp"
#include "hs3/io.hpp"
#include "hs3/oracle.hpp"
#include "hs3/solver.hpp"

namespace hs3 {

namespace {

constexpr std::size_t kMaxFailureNotes = 20;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HS3_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string describe(std::size_t index, long k, const std::string& what) {
  return "case=" + std::to_string(index) + " k=" + std::to_string(k) + " " + what;
}

FuzzSummary run_case(const FuzzConfig& cfg, const PsiTable& table, std::size_t index) {
  FuzzSummary s;
  s.cases = 1;
  const Instance base = fuzz_case(cfg, index);
  const long opt = static_cast<long>(*oracle_min(base.graph));
  auto note = [&](long k, const std::string& what) {
    if (s.failures.size() < kMaxFailureNotes) s.failures.push_back(describe(index, k, what));
  };

  for (long k = 0; k <= opt + 1; ++k) {
    const Instance inst{base.graph, k};
    const bool expected = k >= opt;
    ++s.solves;
    try {
      const SolveReport r = solve(inst, {.full_tree = false, .check_invariants = true, .record_trace = true});
      if (r.decision) ++s.yes;
      if (r.decision != expected) {
        ++s.decision_mismatches;
        note(k, "decision mismatch");
      }
      if (r.decision && (!r.certificate || !verify_hitting(base.graph, *r.certificate) ||
                         static_cast<long>(r.certificate->size()) > k)) {
        ++s.certificate_failures;
        note(k, "bad certificate");
      }
      s.invariant_violations += r.violations.size();
      for (const auto& v : r.violations) note(k, std::string(rule_name(v.rule)) + ": " + v.what);
      s.max_b8_low_d_per_path = std::max(s.max_b8_low_d_per_path, r.max_b8_low_d_per_path);
      for (std::size_t i = 0; i < kRuleCount; ++i) s.rule_counts[i] += r.rule_counts[i];

      const auto mono = check_reduction_monotonicity(table, r.trace);
      s.monotonicity_steps += mono.steps_checked;
      s.monotonicity_violations += mono.violations.size();
      for (const auto& v : mono.violations) note(k, "mu increased across " + std::string(rule_name(v.rule)));

      const SolveReport full = solve(inst, {.full_tree = true, .check_invariants = true, .record_trace = false});
      if (full.decision != r.decision) {
        ++s.decision_mismatches;
        note(k, "full-tree decision differs");
      }
      s.invariant_violations += full.violations.size();
      s.max_leaves = std::max(s.max_leaves, full.leaves);
      s.max_b8_low_d_per_path = std::max(s.max_b8_low_d_per_path, full.max_b8_low_d_per_path);
      if (static_cast<double>(full.leaves) > std::pow(cfg.leaf_base, static_cast<double>(k + 15))) {
        ++s.leaf_bound_violations;
        note(k, "leaf count " + std::to_string(full.leaves) + " above bound");
      }
    } catch (const InvariantError& e) {
      ++s.invariant_violations;
      note(k, e.what());
    }
  }
  return s;
}

void merge(FuzzSummary& into, const FuzzSummary& s) {
  into.cases += s.cases;
  into.solves += s.solves;
  into.yes += s.yes;
  into.decision_mismatches += s.decision_mismatches;
  into.certificate_failures += s.certificate_failures;
  into.leaf_bound_violations += s.leaf_bound_violations;
  into.invariant_violations += s.invariant_violations;
  into.monotonicity_steps += s.monotonicity_steps;
  into.monotonicity_violations += s.monotonicity_violations;
  into.max_b8_low_d_per_path = std::max(into.max_b8_low_d_per_path, s.max_b8_low_d_per_path);
  into.max_leaves = std::max(into.max_leaves, s.max_leaves);
  for (std::size_t i = 0; i < kRuleCount; ++i) into.rule_counts[i] += s.rule_counts[i];
  for (const auto& f : s.failures)
    if (into.failures.size() < kMaxFailureNotes) into.failures.push_back(f);
}

}  // namespace

Instance fuzz_case(const FuzzConfig& cfg, std::size_t index) {
  if (cfg.min_n < 1 || cfg.max_n < cfg.min_n) throw InputError("bad vertex-count range");
  std::mt19937_64 rng(splitmix(cfg.seed ^ splitmix(index)));
  const int n = std::uniform_int_distribution<int>(cfg.min_n, cfg.max_n)(rng);
  const long pairs = cfg.p2 > 0 ? static_cast<long>(n) * (n - 1) / 2 : 0;
  const long triples = cfg.p2 < 1 ? static_cast<long>(n) * (n - 1) * (n - 2) / 6 : 0;
  const long available = pairs + triples;
  const int hi = static_cast<int>(std::min<long>(3L * n, available));
  const int lo = std::min(n, hi);
  const int m = std::uniform_int_distribution<int>(lo, hi)(rng);
  return generate({.n = n, .edge_count = m, .p2 = cfg.p2, .p3 = 1.0 - cfg.p2, .seed = rng(), .k = 0});
}

FuzzSummary run_fuzz(const FuzzConfig& cfg, const PsiTable& table) {
  std::vector<FuzzSummary> per_case(cfg.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cfg.count;) per_case[i] = run_case(cfg, table, i);
  };
  const unsigned threads = std::min<std::size_t>(thread_count(cfg.threads), std::max<std::size_t>(cfg.count, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzSummary total;
  for (const auto& s : per_case) merge(total, s);
  return total;
}

}  // namespace hs3
