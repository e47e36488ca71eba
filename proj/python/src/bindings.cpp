#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "occred/errors.hpp"
#include "occred/graphs/expander.hpp"
#include "occred/graphs/export.hpp"
#include "occred/graphs/gadget.hpp"
#include "occred/graphs/routing.hpp"
#include "occred/oracle/game.hpp"
#include "occred/oracle/occ2.hpp"
#include "occred/qdimacs.hpp"
#include "occred/reduction/pipeline.hpp"

namespace py = pybind11;
using namespace occred;

namespace {

std::vector<std::vector<std::int64_t>> clause_lists(const PrenexFormula& f) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& c : f.clauses) {
    auto& row = out.emplace_back();
    for (auto l : c.literals) row.push_back(l.dimacs());
  }
  return out;
}

std::vector<std::pair<std::string, std::vector<std::uint32_t>>> block_lists(const PrenexFormula& f) {
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> out;
  for (const auto& b : f.blocks) {
    std::vector<std::uint32_t> vars;
    for (auto v : b.variables) vars.push_back(v.value);
    out.emplace_back(std::string(to_string(b.kind)), std::move(vars));
  }
  return out;
}

Assignment to_assignment(const std::map<std::uint32_t, bool>& values) {
  Assignment a;
  for (auto [v, b] : values) a.set(VariableId(v), b);
  return a;
}

GadgetBackend backend_of(const std::string& name) {
  auto b = gadget_backend_from_string(name);
  if (!b) throw py::value_error("unknown backend " + name);
  return *b;
}

}  // namespace

PYBIND11_MODULE(_occred, m) {
  m.doc() = "Occurrence-bounded reductions for quantified CNF formulas";

  auto base = py::register_exception<Error>(m, "OccredError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<CertificationError>(m, "CertificationError", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<IncompleteAssignment>(m, "IncompleteAssignment", base);
  py::register_exception<OccurrenceBoundViolated>(m, "OccurrenceBoundViolated", base);
  py::register_exception<TooLargeForExhaustive>(m, "TooLargeForExhaustive", base);

  py::class_<PrenexFormula>(m, "Formula")
      .def_static("parse", [](const std::string& text) { return parse_qdimacs(text); })
      .def("to_qdimacs", [](const PrenexFormula& f) { return serialize_qdimacs(f); })
      .def_readonly("variable_count", &PrenexFormula::variable_count)
      .def_property_readonly("clauses", &clause_lists)
      .def_property_readonly("blocks", &block_lists)
      .def("__len__", [](const PrenexFormula& f) { return f.clauses.size(); })
      .def("__repr__", [](const PrenexFormula& f) {
        return "<Formula " + std::to_string(f.variable_count) + " variables, " +
               std::to_string(f.clauses.size()) + " clauses>";
      });

  m.def("_profile_json", [](const PrenexFormula& f) { return to_json(occurrence_profile(f)).dump(); });

  m.def(
      "_reduce",
      [](const PrenexFormula& f, std::vector<int> steps, const std::string& style,
         const std::string& backend, std::uint32_t bypass) {
        PipelineOptions opts;
        opts.steps = std::move(steps);
        auto s = step2_style_from_string(style);
        if (!s) throw py::value_error("unknown style " + style);
        opts.step2_style = *s;
        opts.gadget_backend = backend_of(backend);
        opts.bypass_threshold = bypass;
        auto r = run_pipeline(f, opts);
        return std::make_pair(std::move(r.formula), trace_json(r, opts).dump());
      },
      py::arg("formula"), py::arg("steps"), py::arg("style"), py::arg("backend"), py::arg("bypass"));

  m.def(
      "game_value",
      [](const PrenexFormula& f, std::uint64_t budget) { return game_value(f, {budget}).value; },
      py::arg("formula"), py::arg("budget") = kDefaultGameBudget,
      "Alternating max-min number of unsatisfied clauses.");
  m.def(
      "verify_value_preservation",
      [](const PrenexFormula& f, const PrenexFormula& g, std::uint64_t budget) {
        return verify_value_preservation(f, g, {budget});
      },
      py::arg("original"), py::arg("reduced"), py::arg("budget") = kDefaultGameBudget);
  m.def(
      "unsat_count",
      [](const PrenexFormula& f, const std::map<std::uint32_t, bool>& values) {
        return unsat_count(f, to_assignment(values));
      },
      py::arg("formula"), py::arg("assignment"));

  m.def(
      "solve_exists_occ2",
      [](const std::vector<std::vector<std::int64_t>>& clauses, const std::vector<std::uint32_t>& variables)
          -> std::optional<std::map<std::uint32_t, bool>> {
        std::vector<Clause> cs;
        for (const auto& row : clauses) {
          std::vector<Literal> lits;
          for (auto l : row) lits.push_back(Literal::from_dimacs(l));
          cs.emplace_back(std::move(lits));
        }
        std::vector<VariableId> vars;
        for (auto v : variables) vars.emplace_back(v);
        auto r = solve_exists_occ2(cs, vars);
        if (!r.satisfiable) return std::nullopt;
        std::map<std::uint32_t, bool> out;
        for (auto v : vars) out[v.value] = r.witness[v];
        return out;
      },
      py::arg("clauses"), py::arg("variables"),
      "Witness dict when satisfiable, None otherwise.");

  m.def(
      "_gadget_json",
      [](std::uint32_t ell, const std::string& backend, const std::string& verify, std::uint64_t samples,
         std::uint64_t seed) {
        if (ell == 0) throw py::value_error("ell must be at least 1");
        auto g = build_gadget_graph(ell, backend_of(backend));
        auto j = to_json(g);
        if (verify == "exhaustive") j["verification"] = to_json(verify_routing(g, RoutingCheck::exhaustive()));
        else if (verify == "sampled") j["verification"] = to_json(verify_routing(g, RoutingCheck::sampled(samples, seed)));
        else if (!verify.empty()) throw py::value_error("unknown verification " + verify);
        return j.dump();
      },
      py::arg("ell"), py::arg("backend"), py::arg("verify"), py::arg("samples"), py::arg("seed"));

  m.def(
      "_expander_json",
      [](std::uint32_t n, const std::string& verify) {
        if (n == 0) throw py::value_error("n must be at least 1");
        auto g = build_expander(n, false);
        auto j = to_json(g);
        if (verify == "exhaustive") j["verification"] = to_json(verify_edge_expansion(g, ExpansionMode::Exhaustive));
        else if (verify == "spectral") j["verification"] = to_json(verify_edge_expansion(g, ExpansionMode::Spectral));
        else if (!verify.empty()) throw py::value_error("unknown verification " + verify);
        return j.dump();
      },
      py::arg("n"), py::arg("verify"));
}
