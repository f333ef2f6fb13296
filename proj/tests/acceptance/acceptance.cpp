// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hs3/fuzz.hpp"
#include "hs3/measure.hpp"

using namespace hs3;
using Clock = std::chrono::steady_clock;

namespace {

int failed = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d %-28s %s  %s\n", id, name, pass ? "PASS" : "FAIL", detail.c_str());
  failed += !pass;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

}  // namespace

int main() {
  const PsiTable table = PsiTable::bundled_psi4();

  auto t0 = Clock::now();
  const FuzzSummary fz = run_fuzz({.count = 1000, .seed = 2024, .min_n = 4, .max_n = 14}, table);
  const double fuzz_s = seconds_since(t0);

  report(1, "differential-correctness",
         fz.decision_mismatches == 0 && fz.cases == 1000 && fuzz_s < 120,
         "cases=" + std::to_string(fz.cases) + " solves=" + std::to_string(fz.solves) +
             " mismatches=" + std::to_string(fz.decision_mismatches) + fmt(" seconds=%.2f", fuzz_s));
  report(2, "certificate-soundness", fz.certificate_failures == 0 && fz.yes > 0,
         "yes=" + std::to_string(fz.yes) + " failures=" + std::to_string(fz.certificate_failures));

  const auto props = check_properties(table, 1e-6);
  report(3, "table-validity", props.ok(),
         "checks=" + std::to_string(props.checks) + " violations=" + std::to_string(props.violations.size()));

  t0 = Clock::now();
  const std::pair<RuleId, double> targets[] = {{RuleId::B1, 1.8215}, {RuleId::B2, 2.0},    {RuleId::B3, 2.0409},
                                               {RuleId::B4, 1.9584}, {RuleId::B5, 1.7585}, {RuleId::B6, 1.9423},
                                               {RuleId::B8, 2.0409}};
  bool rows_ok = true;
  double global = 0;
  std::string rows;
  for (auto [rule, target] : targets) {
    const auto r = verify_rule(table, rule);
    const bool ok = r.applicable && r.failures.empty() && std::abs(r.max_branching_number - target) <= 0.01;
    rows_ok = rows_ok && ok;
    global = std::max(global, r.max_branching_number);
    rows += std::string(rule_name(rule)) + fmt("=%.4f ", r.max_branching_number);
  }
  const double measure_s = seconds_since(t0);
  report(4, "branching-table-row", rows_ok && global <= 2.0459 && measure_s < 10,
         rows + fmt("global=%.4f seconds=%.3f", global, measure_s));

  const double bn11 = branching_number(std::vector<double>{1, 1});
  const double bn22 = branching_number(std::vector<double>{2, 2});
  const double bn12 = branching_number(std::vector<double>{1, 2});
  report(5, "branching-number-solver",
         std::abs(bn11 - 2.0) <= 1e-9 && std::abs(bn22 - 1.4142136) <= 1e-6 && std::abs(bn12 - 1.6180340) <= 1e-6,
         fmt("(1,1)=%.10f (2,2)=%.10f (1,2)=%.10f", bn11, bn22, bn12));

  report(6, "leaf-bound", fz.leaf_bound_violations == 0,
         "violations=" + std::to_string(fz.leaf_bound_violations) + " max_leaves=" + std::to_string(fz.max_leaves));

  report(7, "runtime-invariants", fz.invariant_violations == 0 && fz.max_b8_low_d_per_path <= 1,
         "violations=" + std::to_string(fz.invariant_violations) +
             " max_b8_low_d_per_path=" + std::to_string(fz.max_b8_low_d_per_path));

  report(8, "reduction-monotonicity", fz.monotonicity_violations == 0 && fz.monotonicity_steps > 0,
         "steps=" + std::to_string(fz.monotonicity_steps) + " violations=" + std::to_string(fz.monotonicity_violations));

  for (const auto& f : fz.failures) std::printf("  note: %s\n", f.c_str());
  return failed == 0 ? 0 : 1;
}
