#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hs3/errors.hpp"
#include "hs3/fuzz.hpp"
#include "hs3/io.hpp"
#include "hs3/measure.hpp"
#include "hs3/oracle.hpp"
#include "hs3/solver.hpp"

namespace py = pybind11;
using namespace hs3;

namespace {

Hypergraph make_graph(const std::vector<std::vector<Vertex>>& edges, std::optional<std::vector<Vertex>> vertices) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& e : edges) es.emplace_back(std::span<const Vertex>(e));
  if (vertices) return Hypergraph(*vertices, std::move(es));
  return Hypergraph::from_edges(std::move(es));
}

std::vector<std::vector<Vertex>> edge_lists(const Hypergraph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.begin(), e.end());
  return out;
}

RuleId rule_arg(const std::string& name) {
  auto r = rule_from_name(name);
  if (!r) throw InputError("unknown rule " + name);
  return *r;
}

py::dict vector_dict(const FamilyVector& v) {
  py::dict d;
  d["family"] = v.family;
  d["params"] = v.params;
  d["entries"] = v.entries;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hs3, m) {
  m.doc() = "Exact 3-hitting set solver and measure verifier";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", input_error.ptr());
  static py::exception<InvariantError> invariant_error(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const InvariantError& e) {
      py::set_error(invariant_error, e.what());
    }
  });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&make_graph), py::arg("edges"), py::arg("vertices") = py::none())
      .def_property_readonly("vertices", &Hypergraph::vertices)
      .def_property_readonly("edges", &edge_lists)
      .def("plus", [](const Hypergraph& g, Vertex v) { return plus(g, v); })
      .def("minus", [](const Hypergraph& g, Vertex v) { return minus(g, v); })
      .def("degree", [](const Hypergraph& g, Vertex v) { return degree(g, v); })
      .def("stats",
           [](const Hypergraph& g, Vertex v) {
             const auto s = stats(g, v);
             py::dict d;
             d["d"] = s.d;
             d["d2"] = s.d2;
             d["d3"] = s.d3;
             d["D2"] = s.D2;
             d["I"] = s.I;
             return d;
           })
      .def("two_section",
           [](const Hypergraph& g) {
             const auto s = two_section(g);
             return py::make_tuple(s.m2, s.c2, s.d2_max);
           },
           "(m2, c2, d2_max)")
      .def("components", [](const Hypergraph& g) { return components(g); })
      .def("minimalize", [](const Hypergraph& g) { return minimalize(g); })
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__len__", &Hypergraph::edge_count)
      .def("__repr__", [](const Hypergraph& g) {
        return "<Hypergraph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("decision", &SolveReport::decision)
      .def_readonly("certificate", &SolveReport::certificate)
      .def_readonly("leaves", &SolveReport::leaves)
      .def_readonly("nodes", &SolveReport::nodes)
      .def_readonly("alpha_flag", &SolveReport::alpha_flag)
      .def_readonly("max_b8_low_d_per_path", &SolveReport::max_b8_low_d_per_path)
      .def_property_readonly("rule_counts",
                             [](const SolveReport& r) {
                               py::dict d;
                               for (std::size_t i = 0; i < kRuleCount; ++i)
                                 if (r.rule_counts[i]) d[py::str(rule_name(static_cast<RuleId>(i)))] = r.rule_counts[i];
                               return d;
                             })
      .def_property_readonly("violations", [](const SolveReport& r) {
        std::vector<std::string> out;
        for (const auto& v : r.violations) out.push_back(std::string(rule_name(v.rule)) + ": " + v.what);
        return out;
      });

  m.def(
      "solve",
      [](const Hypergraph& g, long k, bool full_tree, bool check_invariants) {
        return solve({g, k}, {.full_tree = full_tree, .check_invariants = check_invariants});
      },
      py::arg("graph"), py::arg("k"), py::arg("full_tree") = false, py::arg("check_invariants") = true,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "solve_minimum",
      [](const Hypergraph& g) {
        auto r = solve_minimum(g);
        return py::make_tuple(r.k, r.certificate);
      },
      "(k, certificate)");
  m.def("verify_hitting", [](const Hypergraph& g, const std::vector<Vertex>& s) { return verify_hitting(g, s); });
  m.def("oracle_min", &oracle_min, py::arg("graph"), py::arg("cap") = py::none());
  m.def("oracle_decide", &oracle_decide);
  m.def("select_rule", [](const Hypergraph& g, long k) { return std::string(rule_name(select_rule({g, k}).rule)); });

  m.def("parse_instance", [](const std::string& text) {
    auto inst = parse_instance(text);
    return py::make_tuple(inst.graph, inst.k);
  });
  m.def("serialize_instance", [](const Hypergraph& g, long k) { return serialize_instance({g, k}); });
  m.def(
      "generate",
      [](int n, int edge_count, double p2, std::uint64_t seed, long k) {
        auto inst = generate({.n = n, .edge_count = edge_count, .p2 = p2, .p3 = 1.0 - p2, .seed = seed, .k = k});
        return py::make_tuple(inst.graph, inst.k);
      },
      py::arg("n"), py::arg("edge_count"), py::arg("p2") = 0.5, py::arg("seed") = 1, py::arg("k") = -1);

  py::class_<PsiTable>(m, "PsiTable")
      .def(py::init<int>(), py::arg("dhat"))
      .def_static("bundled_psi4", &PsiTable::bundled_psi4)
      .def_static("parse", &parse_psi_table)
      .def("serialize", &serialize_psi_table)
      .def_property_readonly("dhat", &PsiTable::dhat)
      .def("set", &PsiTable::set)
      .def("psi", [](const PsiTable& t, int mm, int c) { return psi(t, mm, c); })
      .def("psi_star", [](const PsiTable& t, int mm) { return psi_star(t, mm); })
      .def("delta", [](const PsiTable& t, int mm, int a, int c, int cp) { return delta(t, mm, a, c, cp); })
      .def("mu", [](const PsiTable& t, const Hypergraph& g, long k) { return mu(t, {g, k}); });

  m.def("branching_number", [](const std::vector<double>& v) { return branching_number(v); });
  m.def("dominates", [](const std::vector<double>& a, const std::vector<double>& b) { return dominates(a, b); });
  m.def(
      "enumerate_vectors",
      [](const PsiTable& t, const std::string& rule, int d_max) {
        py::list out;
        for (const auto& v : enumerate_vectors(t, rule_arg(rule), {.d_max = d_max})) out.append(vector_dict(v));
        return out;
      },
      py::arg("table"), py::arg("rule"), py::arg("d_max") = 10);
  m.def(
      "verify_rule",
      [](const PsiTable& t, const std::string& rule, int d_max) {
        const auto r = verify_rule(t, rule_arg(rule), {.d_max = d_max});
        py::dict d;
        d["applicable"] = r.applicable;
        d["vectors"] = r.vector_count;
        d["max"] = r.max_branching_number;
        d["argmax"] = r.argmax ? py::object(vector_dict(*r.argmax)) : py::none();
        py::list failures;
        for (const auto& f : r.failures) failures.append(vector_dict(f));
        d["failures"] = failures;
        return d;
      },
      py::arg("table"), py::arg("rule"), py::arg("d_max") = 10);
  m.def("check_properties", [](const PsiTable& t, double slack) {
    const auto r = check_properties(t, slack);
    py::list out;
    for (const auto& v : r.violations) out.append(py::make_tuple(v.property, v.m, v.c, v.a, v.cp));
    return out;
  }, py::arg("table"), py::arg("slack") = 1e-6);

  m.def(
      "run_fuzz",
      [](std::size_t count, std::uint64_t seed, int max_n, double p2) {
        FuzzSummary s;
        {
          py::gil_scoped_release release;
          s = run_fuzz({.count = count, .seed = seed, .max_n = max_n, .p2 = p2}, PsiTable::bundled_psi4());
        }
        py::dict d;
        d["cases"] = s.cases;
        d["solves"] = s.solves;
        d["mismatches"] = s.decision_mismatches;
        d["certificate_failures"] = s.certificate_failures;
        d["leaf_bound_violations"] = s.leaf_bound_violations;
        d["invariant_violations"] = s.invariant_violations;
        d["monotonicity_violations"] = s.monotonicity_violations;
        d["ok"] = s.ok();
        return d;
      },
      py::arg("count") = 100, py::arg("seed") = 1, py::arg("max_n") = 14, py::arg("p2") = 0.5);
}
