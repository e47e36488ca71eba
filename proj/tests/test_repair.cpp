#include <doctest.h>

#include <random>

#include "occred/errors.hpp"
#include "occred/graphs/routing.hpp"
#include "occred/oracle/game.hpp"
#include "occred/oracle/occ2.hpp"
#include "occred/oracle/repair.hpp"
#include "occred/qdimacs.hpp"
#include "occred/reduction/universal.hpp"
#include "support/brute_force.hpp"
#include "support/corpus.hpp"

using namespace occred;

namespace {

Occ2Result solve(const PrenexFormula& f) {
  return solve_exists_occ2(f.clauses, f.blocks.at(0).variables);
}

// x occurs three times, so step 1 builds an ell = 3 gadget.
const char* kThree = "p cnf 2 3\na 1 0\ne 2 0\n1 2 0\n1 -2 0\n-1 2 0\n";

Assignment all_values(const PrenexFormula& f, bool value) {
  Assignment a(first_free_id(f));
  for (const auto& b : f.blocks)
    for (auto v : b.variables) a.set(v, value);
  return a;
}

bool outdegree_ok(const PrenexFormula& f, const Assignment& a) {
  for (const auto& c : f.clauses) {
    if (!c.provenance || c.provenance->kind != ClauseKind::Outdegree) continue;
    bool sat = false;
    for (auto l : c.literals) sat = sat || a.value_of(l);
    if (!sat) return false;
  }
  return true;
}

// Every gadget vertex takes t(x); edges on a disjoint routing of the first ell
// inputs carry flow.
Assignment routed(const StepResult& r, bool tx) {
  Assignment a = all_values(r.formula, tx);
  for (const auto& g : r.trace.universal_gadgets) {
    for (auto e : g.edge_vars) a.set(e, false);
    std::vector<std::uint32_t> sources(g.graph.inputs.begin(), g.graph.inputs.begin() + g.ell);
    auto paths = max_vertex_disjoint_paths(g.graph, sources);
    REQUIRE(paths.count == g.ell);
    for (const auto& p : paths.paths)
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t e = 0; e < g.graph.edges.size(); ++e)
          if (g.graph.edges[e] == std::pair{p[i], p[i + 1]}) a.set(g.edge_vars[e], true);
  }
  return a;
}

}  // namespace

TEST_CASE("occurrence-2 solver examples") {
  auto f = parse_qdimacs("p cnf 2 2\ne 1 2 0\n1 2 0\n-1 -2 0\n");
  auto r = solve(f);
  REQUIRE(r.satisfiable);
  CHECK(r.witness[VariableId(1)]);
  CHECK_FALSE(r.witness[VariableId(2)]);
  CHECK(unsat_count(f, r.witness) == 0);

  auto g = parse_qdimacs("p cnf 1 2\ne 1 0\n1 0\n-1 0\n");
  auto s = solve(g);
  CHECK_FALSE(s.satisfiable);
  CHECK(s.residue_clauses == 2);
  CHECK(s.residue_variables == 1);

  auto h = parse_qdimacs("p cnf 2 3\ne 1 2 0\n1 2 0\n-1 0\n-2 0\n");
  CHECK_FALSE(solve(h).satisfiable);

  auto same_sign = parse_qdimacs("p cnf 2 2\ne 1 2 0\n1 2 0\n1 -2 0\n");
  auto t = solve(same_sign);
  CHECK(t.satisfiable);
  CHECK(t.residue_clauses == 0);

  CHECK(solve_exists_occ2({}, {}).satisfiable);
}

TEST_CASE("occurrence-2 solver errors") {
  auto f = parse_qdimacs("p cnf 1 3\ne 1 0\n1 0\n1 0\n-1 0\n");
  CHECK_THROWS_AS(solve(f), OccurrenceBoundViolated);
  auto g = parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 2 0\n");
  CHECK_THROWS_AS(solve(g), PreconditionViolated);
}

TEST_CASE("occurrence-2 solver agrees with enumeration") {
  std::mt19937_64 rng(11);
  int sat = 0;
  for (int i = 0; i < 3000; ++i) {
    auto f = testing::random_occ2_formula(rng, 1 + i % 16);
    auto r = solve(f);
    REQUIRE(r.satisfiable == testing::bitsliced_satisfiable(f));
    if (r.satisfiable) {
      ++sat;
      CHECK(unsat_count(f, r.witness) == 0);
    }
  }
  CHECK(sat > 100);
  CHECK(sat < 2900);
}

TEST_CASE("repair leaves a good assignment alone") {
  auto f = parse_qdimacs(kThree);
  auto r = step1_reduce(f);
  auto a = routed(r, true);
  REQUIRE(outdegree_ok(r.formula, a));
  auto b = repair_outdegree(r.formula, r.trace, a);
  for (std::uint32_t v = 1; v < first_free_id(r.formula); ++v)
    CHECK(a.get(VariableId(v)) == b.get(VariableId(v)));
}

TEST_CASE("repair clears every multi-out vertex") {
  auto f = parse_qdimacs(kThree);
  auto r = step1_reduce(f);
  auto a = all_values(r.formula, true);
  CHECK_FALSE(outdegree_ok(r.formula, a));
  auto b = repair_outdegree(r.formula, r.trace, a);
  CHECK(outdegree_ok(r.formula, b));
  CHECK(unsat_count(r.formula, b) <= unsat_count(r.formula, a));
  const auto& g = r.trace.universal_gadgets.at(0);
  for (const auto& out : g.graph.out_edges())
    if (out.size() > 1)
      for (auto e : out) CHECK_FALSE(b[g.edge_vars[e]]);
}

TEST_CASE("repair on random assignments") {
  auto corpus = testing::build_corpus(20, 500);
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (const auto& f : corpus) {
    auto r = step1_reduce(f);
    for (int i = 0; i < 20; ++i) {
      Assignment a(first_free_id(r.formula));
      for (const auto& b : r.formula.blocks)
        for (auto v : b.variables) a.set(v, coin(rng));
      auto b = repair_outdegree(r.formula, r.trace, a);
      CHECK(outdegree_ok(r.formula, b));
      CHECK(unsat_count(r.formula, b) <= unsat_count(r.formula, a));
    }
  }
}

TEST_CASE("repair rejects a foreign trace") {
  auto f = parse_qdimacs(kThree);
  auto r = step1_reduce(f);
  auto a = all_values(r.formula, false);
  auto wrong = r.trace;
  wrong.step = 2;
  CHECK_THROWS_AS(repair_outdegree(r.formula, wrong, a), TraceMismatch);
  wrong = r.trace;
  wrong.universal_gadgets.at(0).edge_vars.pop_back();
  CHECK_THROWS_AS(repair_outdegree(r.formula, wrong, a), TraceMismatch);
  CHECK_THROWS_AS(repair_outdegree(f, r.trace, all_values(f, false)), TraceMismatch);
  CHECK_THROWS_AS(repair_outdegree(r.formula, r.trace, Assignment(1)), IncompleteAssignment);
}

TEST_CASE("mismatch bound") {
  // x occurs twice, so bypass it with threshold 1 to get an ell = 2 gadget.
  auto f = parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n");
  PipelineOptions opts;
  opts.bypass_threshold = 1;
  auto r = step1_reduce(f, opts);
  const auto& g = r.trace.universal_gadgets.at(0);
  REQUIRE(g.ell == 2);
  Assignment t(2);
  t.set(VariableId(1), false);

  auto a = routed(r, false);
  auto count = count_mismatch(r.formula, r.trace, a, t);
  CHECK(count.mismatched_outputs == 0);
  CHECK(count.broken == 0);
  CHECK(check_mismatch_bound(r.formula, r.trace, a, t));

  a.set(g.vertex_vars[g.graph.outputs[0]], true);
  count = count_mismatch(r.formula, r.trace, a, t);
  CHECK(count.mismatched_outputs == 1);
  CHECK(count.broken >= 1);

  auto bad_input = routed(r, false);
  bad_input.set(g.vertex_vars[g.graph.inputs[0]], true);
  CHECK_THROWS_AS(check_mismatch_bound(r.formula, r.trace, bad_input, t), PreconditionViolated);
  auto crowded = all_values(r.formula, false);
  for (auto e : g.edge_vars) crowded.set(e, true);
  if (!outdegree_ok(r.formula, crowded))
    CHECK_THROWS_AS(check_mismatch_bound(r.formula, r.trace, crowded, t), PreconditionViolated);
  CHECK_THROWS_AS(check_mismatch_bound(r.formula, r.trace, a, Assignment(2)), PreconditionViolated);
}
