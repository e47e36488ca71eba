#include <doctest.h>

#include <random>
#include <sstream>

#include "occred/assignment.hpp"
#include "occred/errors.hpp"
#include "occred/formula.hpp"
#include "occred/qdimacs.hpp"

using namespace occred;

namespace {

Literal lit(int v) { return Literal::from_dimacs(v); }

}  // namespace

TEST_CASE("parse a two-block instance") {
  auto f = parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n");
  REQUIRE(f.blocks.size() == 2);
  CHECK(f.blocks[0].kind == Quantifier::Universal);
  CHECK(f.blocks[0].variables == std::vector{VariableId(1)});
  CHECK(f.blocks[1].kind == Quantifier::Existential);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0].literals == std::vector{lit(1), lit(2)});
  CHECK(f.clauses[1].literals == std::vector{lit(-1), lit(-2)});
  CHECK(f.variable_count == 2);
}

TEST_CASE("repeated literals are kept") {
  auto f = parse_qdimacs("p cnf 1 1\ne 1 0\n1 1 0\n");
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0].literals == std::vector{lit(1), lit(1)});
  CHECK(occurrence_profile(f).per_variable.at(VariableId(1)) == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\na 1 0\n2 0\n"), BindingError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\na 1 0\na 1 0\n1 0\n"), BindingError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\ne 1 0\n0\n"), EmptyClauseError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\ne 1 0\n1 x 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_qdimacs("e 1 0\n1 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 1 2\ne 1 0\n1 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\ne 1 0\n2 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\ne 1 0\n1\n"), SyntaxError);
  try {
    parse_qdimacs("p cnf 1 1\ne 1 0\n1 y 0\n");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("comments and multi-line clauses") {
  auto f = parse_qdimacs("c hello\np cnf 3 1\nc mid\ne 1 2 3 0\n1 2\n3 0\n");
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0].size() == 3);
}

TEST_CASE("serialization") {
  auto f = parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n");
  CHECK(serialize_qdimacs(f) == "p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n");

  auto g = parse_qdimacs("p cnf 3 1\na 1 0\ne 2 0\na 3 0\n1 2 3 0\n");
  CHECK(serialize_qdimacs(g) == "p cnf 3 1\na 1 0\ne 2 0\na 3 0\n1 2 3 0\n");

  PrenexFormula empty;
  empty.variable_count = 4;
  CHECK(serialize_qdimacs(empty) == "p cnf 4 0\n");
}

TEST_CASE("round trip on random formulas") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    PrenexFormula f;
    std::uint32_t n = 1 + rng() % 12;
    f.variable_count = n;
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    Quantifier kind = rng() % 2 ? Quantifier::Universal : Quantifier::Existential;
    for (std::size_t i = 0; i < n;) {
      std::size_t len = 1 + rng() % (n - i);
      QuantifierBlock b{kind, {}};
      for (std::size_t k = 0; k < len; ++k) b.variables.emplace_back(order[i + k]);
      f.blocks.push_back(b);
      i += len;
      kind = kind == Quantifier::Universal ? Quantifier::Existential : Quantifier::Universal;
    }
    std::size_t m = rng() % 16;
    for (std::size_t c = 0; c < m; ++c) {
      Clause clause;
      std::size_t len = 1 + rng() % 5;
      for (std::size_t k = 0; k < len; ++k)
        clause.literals.emplace_back(VariableId(1 + rng() % n), rng() % 2 == 0);
      f.clauses.push_back(clause);
    }
    auto back = parse_qdimacs(serialize_qdimacs(f));
    CHECK(same_structure(f, back));

    auto profile = occurrence_profile(f);
    std::size_t total = 0;
    for (const auto& [v, count] : profile.per_variable) total += count;
    CHECK(total == f.literal_count());
  }
}

TEST_CASE("occurrence profile") {
  auto f = parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n");
  auto p = occurrence_profile(f);
  CHECK(p.per_variable.at(VariableId(1)) == 2);
  CHECK(p.per_variable.at(VariableId(2)) == 2);
  CHECK(p.max_universal == 2);
  CHECK(p.max_existential == 2);
  CHECK(p.max_clause_size == 2);

  auto g = parse_qdimacs("p cnf 1 1\ne 1 0\n1 1 1 0\n");
  CHECK(occurrence_profile(g).per_variable.at(VariableId(1)) == 3);
}

TEST_CASE("normalize blocks") {
  PrenexFormula f;
  f.variable_count = 3;
  f.blocks = {{Quantifier::Universal, {VariableId(1)}},
              {Quantifier::Universal, {VariableId(2)}},
              {Quantifier::Existential, {VariableId(3)}}};
  f.clauses = {Clause({lit(1), lit(2), lit(3)})};
  auto g = normalize_blocks(f);
  REQUIRE(g.blocks.size() == 2);
  CHECK(g.blocks[0].variables == std::vector{VariableId(1), VariableId(2)});
  CHECK(same_structure(normalize_blocks(g), g));

  PrenexFormula h = f;
  h.clauses = {Clause({lit(1), lit(3)})};
  auto k = normalize_blocks(h);
  REQUIRE(k.blocks.size() == 2);
  CHECK(k.blocks[0].variables == std::vector{VariableId(1)});

  // Dropping the only universal merges the surrounding existential blocks.
  PrenexFormula e;
  e.variable_count = 3;
  e.blocks = {{Quantifier::Existential, {VariableId(1)}},
              {Quantifier::Universal, {VariableId(2)}},
              {Quantifier::Existential, {VariableId(3)}}};
  e.clauses = {Clause({lit(1), lit(3)})};
  auto n = normalize_blocks(e);
  REQUIRE(n.blocks.size() == 1);
  CHECK(n.blocks[0].variables == std::vector{VariableId(1), VariableId(3)});
}

TEST_CASE("assignment certificate line") {
  Assignment a(3);
  a.set(VariableId(1), true);
  a.set(VariableId(2), false);
  std::vector<VariableId> vars{VariableId(1), VariableId(2), VariableId(3)};
  CHECK(certificate_line(a, vars) == "v 1 -2 0");
  CHECK_FALSE(a.covers(vars));
  a.set(VariableId(3), true);
  CHECK(a.covers(vars));
}
