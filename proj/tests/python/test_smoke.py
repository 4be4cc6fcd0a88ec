from fractions import Fraction
from itertools import islice

import pytest

import fhtw

TRIANGLE = {"edges": [["a", "b"], ["b", "c"], ["a", "c"]]}


def test_covers_and_duality():
    h2 = fhtw.generate_hn(2)
    assert fhtw.rho_star(h2) == 2
    value, witness = fhtw.fractional_edge_cover(TRIANGLE)
    assert value == Fraction(3, 2)
    assert sum(w for _, w in witness) == value
    alpha, y = fhtw.alpha_star(TRIANGLE)
    assert alpha == value
    assert y == {"a": Fraction(1, 2), "b": Fraction(1, 2), "c": Fraction(1, 2)}
    assert fhtw.fractional_edge_cover(TRIANGLE, ["a"])[0] == 1
    assert fhtw.edge_cover_number(h2)[0] == 3


def test_widths_and_validation():
    h2 = fhtw.generate_hn(2)
    ghw, witness = fhtw.exact_width(h2, "ghw")
    assert ghw == 2
    report = fhtw.validate(h2, witness)
    assert report["valid"] and report["width"] == 2
    assert fhtw.exact_width(TRIANGLE, "fhw")[0] == Fraction(3, 2)
    assert fhtw.exact_width(fhtw.generate_universal(5), "tree")[0] == 4


def test_game_and_separators():
    assert fhtw.army_width(TRIANGLE) == Fraction(3, 2)
    assert not fhtw.general_wins(TRIANGLE, 1)
    assert fhtw.general_wins(TRIANGLE, "3/2")
    d = fhtw.decompose_by_separators(TRIANGLE, Fraction(3, 2))
    report = fhtw.validate(TRIANGLE, d)
    assert report["valid"] and report["special_condition"]
    assert report["width"] <= Fraction(13, 2)


def test_solving_and_streams():
    tight = fhtw.generate_tight(TRIANGLE, 2)
    sols = list(fhtw.enumerate_all(tight))
    assert len(sols) == 8
    assert sorted(map(lambda s: tuple(sorted(s.items())), sols)) == sorted(
        map(lambda s: tuple(sorted(s.items())), fhtw.brute_force_solutions(tight)))
    assert len(fhtw.enumerate_by_cover(tight)) == 8
    assert fhtw.solve(tight) == sols[0]
    assert list(islice(fhtw.enumerate_all(tight), 2)) == sols[:2]
    assert list(fhtw.project_solutions(tight, ["b"])) == [{"b": "1"}, {"b": "2"}]


def test_random_instances_are_deterministic():
    a = fhtw.generate_random(42, 6, 3, 5, 3, 0.5)
    assert a == fhtw.generate_random(42, 6, 3, 5, 3, 0.5)
    assert len(list(fhtw.enumerate_all(a))) == len(fhtw.brute_force_solutions(a))


def test_errors():
    with pytest.raises(ValueError):
        fhtw.rho_star({"edges": [["a"], []]})
    with pytest.raises(ValueError):
        fhtw.generate_hn(9)
    with pytest.raises(fhtw.ResourceLimitError):
        fhtw.generate_tight(TRIANGLE, 5000)
    assert fhtw.solve({"variables": ["x"], "domain": ["0"], "constraints": [{"scope": ["x"], "tuples": []}]}) is None
