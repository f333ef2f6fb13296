#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hs3/errors.hpp"
#include "hs3/fuzz.hpp"
#include "hs3/io.hpp"
#include "hs3/measure.hpp"
#include "hs3/oracle.hpp"
#include "hs3/solver.hpp"

namespace {

std::string join(const std::vector<hs3::Vertex>& vs) {
  std::string s;
  for (auto v : vs) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string vec_str(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fixed4(v[i]);
  return s + ")";
}

int cmd_solve(const std::string& file, std::optional<long> k, bool full_tree, bool cert) {
  hs3::Instance inst = hs3::read_instance(file);
  if (k) inst.k = *k;
  const auto r = hs3::solve(inst, {.full_tree = full_tree});
  std::cout << "decision=" << (r.decision ? "yes" : "no") << '\n' << "k=" << inst.k << '\n';
  if (cert && r.certificate) std::cout << "certificate=" << join(*r.certificate) << '\n';
  std::cout << "leaves=" << r.leaves << '\n' << "nodes=" << r.nodes << '\n';
  for (std::size_t i = 0; i < hs3::kRuleCount; ++i)
    if (r.rule_counts[i]) std::cout << "count." << hs3::rule_name(static_cast<hs3::RuleId>(i)) << '=' << r.rule_counts[i] << '\n';
  std::cout << "alpha=" << r.alpha_flag << '\n' << "violations=" << r.violations.size() << '\n';
  return r.violations.empty() ? 0 : 1;
}

int cmd_min(const std::string& file) {
  const auto res = hs3::solve_minimum(hs3::read_instance(file).graph);
  std::cout << "min=" << res.k << '\n' << "certificate=" << join(res.certificate) << '\n';
  return 0;
}

int cmd_oracle(const std::string& file) {
  const auto inst = hs3::read_instance(file);
  std::cout << "min=" << *hs3::oracle_min(inst.graph) << '\n'
            << "decision=" << (hs3::oracle_decide(inst.graph, inst.k) ? "yes" : "no") << '\n';
  return 0;
}

int cmd_fuzz(const hs3::FuzzConfig& cfg) {
  const auto s = hs3::run_fuzz(cfg, hs3::PsiTable::bundled_psi4());
  std::cout << "cases=" << s.cases << '\n'
            << "solves=" << s.solves << '\n'
            << "yes=" << s.yes << '\n'
            << "mismatches=" << s.decision_mismatches << '\n'
            << "certificate_failures=" << s.certificate_failures << '\n'
            << "leaf_bound_violations=" << s.leaf_bound_violations << '\n'
            << "invariant_violations=" << s.invariant_violations << '\n'
            << "monotonicity_steps=" << s.monotonicity_steps << '\n'
            << "monotonicity_violations=" << s.monotonicity_violations << '\n'
            << "max_leaves=" << s.max_leaves << '\n';
  for (std::size_t i = 0; i < hs3::kRuleCount; ++i)
    std::cout << "count." << hs3::rule_name(static_cast<hs3::RuleId>(i)) << '=' << s.rule_counts[i] << '\n';
  for (const auto& f : s.failures) std::cout << "failure=" << f << '\n';
  return s.ok() ? 0 : 1;
}

int cmd_verify_measure(const std::string& table_file, double target, int d_max) {
  const hs3::PsiTable t = table_file.empty() ? hs3::PsiTable::bundled_psi4() : hs3::read_psi_table(table_file);
  const auto props = hs3::check_properties(t);
  std::cout << "dhat=" << t.dhat() << '\n' << "property_checks=" << props.checks << '\n'
            << "property_violations=" << props.violations.size() << '\n';
  for (const auto& v : props.violations)
    std::cout << "violation=" << v.property << " m=" << v.m << " c=" << v.c << " a=" << v.a << " c'=" << v.cp << '\n';

  bool ok = props.ok();
  double global = 0;
  for (hs3::RuleId rule : hs3::measured_rules()) {
    const auto r = hs3::verify_rule(t, rule, {.d_max = d_max});
    const auto name = hs3::rule_name(rule);
    if (!r.applicable) {
      std::cout << name << " NA\n";
      continue;
    }
    global = std::max(global, r.max_branching_number);
    std::cout << name << " max=" << fixed4(r.max_branching_number) << " vectors=" << r.vector_count
              << " argmax=" << r.argmax->family << '[' << r.argmax->params << "] " << vec_str(r.argmax->entries) << '\n';
    for (const auto& f : r.failures) std::cout << name << " failure=" << f.family << '[' << f.params << "]\n";
    ok = ok && r.failures.empty();
  }
  if (t.dhat() == 6) std::cout << "note=B3 d2 family enumerated for d in [3," << d_max << "]\n";
  const bool within = global <= target + 0.005;
  std::cout << "global_max=" << fixed4(global) << '\n' << "target=" << target << '\n'
            << "within_target=" << (within ? "yes" : "no") << '\n';
  return ok && within ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 3-hitting set solver"};
  app.require_subcommand(1);

  std::string file;
  std::optional<long> k;
  bool full_tree = false, cert = false;
  auto* solve = app.add_subcommand("solve", "Decide whether FILE has a hitting set of size <= k");
  solve->add_option("file", file, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--k", k, "Override the header budget");
  solve->add_flag("--full-tree", full_tree, "Explore every branch");
  solve->add_flag("--cert", cert, "Print the certificate");

  auto* min = app.add_subcommand("min", "Smallest k with a yes answer");
  min->add_option("file", file, "Instance file")->required()->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "Brute-force minimum and decision");
  oracle->add_option("file", file, "Instance file")->required()->check(CLI::ExistingFile);

  hs3::FuzzConfig fz;
  auto* fuzz = app.add_subcommand("fuzz", "Differential test against the oracle");
  fuzz->add_option("--count", fz.count, "Number of instances");
  fuzz->add_option("--seed", fz.seed, "Suite seed");
  fuzz->add_option("--max-n", fz.max_n, "Largest vertex count")->check(CLI::Range(4, 40));
  fuzz->add_option("--p2", fz.p2, "Probability of a 2-edge")->check(CLI::Range(0.0, 1.0));
  fuzz->add_option("--threads", fz.threads, "Worker threads (default: HS3_THREADS or all cores)");

  std::string table_file;
  double target = 2.0409;
  int d_max = 10;
  auto* vm = app.add_subcommand("verify-measure", "Check a measure table and every rule's branching vectors");
  vm->add_option("--table", table_file, "Table file (default: bundled dhat=4 table)")->check(CLI::ExistingFile);
  vm->add_option("--target", target, "Largest acceptable branching number");
  vm->add_option("--d-max", d_max, "Cap on d for the unbounded degree family")->check(CLI::Range(3, 50));

  hs3::GenConfig gc;
  auto* gen = app.add_subcommand("gen", "Write a random instance to stdout");
  gen->add_option("--n", gc.n, "Vertex count")->check(CLI::NonNegativeNumber);
  gen->add_option("--edges", gc.edge_count, "Edge count")->check(CLI::NonNegativeNumber);
  gen->add_option("--p2", gc.p2, "Probability of a 2-edge")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gc.seed, "Seed");
  gen->add_option("--k", gc.k, "Header budget (default n/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(file, k, full_tree, cert);
    if (*min) return cmd_min(file);
    if (*oracle) return cmd_oracle(file);
    if (*fuzz) return cmd_fuzz(fz);
    if (*vm) return cmd_verify_measure(table_file, target, d_max);
    if (*gen) {
      gc.p3 = 1.0 - gc.p2;
      std::cout << hs3::serialize_instance(hs3::generate(gc));
      return 0;
    }
  } catch (const hs3::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hs3::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
