import pytest

import occred

TINY = "p cnf 3 3\na 1 0\ne 2 3 0\n1 2 0\n1 -2 3 0\n1 -3 0\n"


def test_parse_round_trip():
    f = occred.parse_qdimacs(TINY)
    assert f.variable_count == 3
    assert f.clauses == [[1, 2], [1, -2, 3], [1, -3]]
    assert f.blocks == [("universal", [1]), ("existential", [2, 3])]
    assert occred.parse_qdimacs(f.to_qdimacs()).clauses == f.clauses


def test_parse_error():
    with pytest.raises(occred.ParseError):
        occred.parse_qdimacs("p cnf 1 1\ne 1 0\n2 0\n")
    assert issubclass(occred.ParseError, occred.OccredError)


def test_reduce_preserves_value():
    f = occred.parse_qdimacs(TINY)
    g, trace = occred.reduce(f)
    profile = occred.occurrence_profile(g)
    assert profile["max_universal"] <= 2
    assert all(len(c) == 3 for c in g.clauses)
    assert len(trace["steps"]) == 3
    assert occred.game_value(f) == occred.game_value(g) == 1
    assert occred.verify_value_preservation(f, g)


def test_reduce_options():
    f = occred.parse_qdimacs(TINY)
    g, trace = occred.reduce(f, steps=[1], bypass=3)
    assert g.clauses == f.clauses
    with pytest.raises(ValueError):
        occred.reduce(f, style="ring")


def test_game_value_examples():
    assert occred.game_value(occred.parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n")) == 0
    assert occred.game_value(occred.parse_qdimacs("p cnf 2 2\ne 2 0\na 1 0\n1 2 0\n-1 -2 0\n")) == 1
    f = occred.parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n")
    assert occred.unsat_count(f, {1: True, 2: True}) == 1
    with pytest.raises(occred.IncompleteAssignment):
        occred.unsat_count(f, {1: True})


def test_occ2_solver():
    assert occred.solve_exists_occ2([[1, 2], [-1, -2]], [1, 2]) == {1: True, 2: False}
    assert occred.solve_exists_occ2([[1], [-1]], [1]) is None
    with pytest.raises(occred.OccurrenceBoundViolated):
        occred.solve_exists_occ2([[1], [1], [-1]], [1])


def test_graphs():
    g = occred.gadget(6, verify="exhaustive")
    assert g["verification"]["witness_failure"] is None
    e = occred.expander(9, verify="spectral")
    assert e["verification"]["holds"]
    assert e["verification"]["certificate"] > 1
    with pytest.raises(ValueError):
        occred.gadget(0)
