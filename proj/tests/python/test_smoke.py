from fractions import Fraction

import pytest

import domkit


def test_ratio_cases():
    r = domkit.domination_ratio(3, 4)
    assert r["ratio"] == Fraction(2, 5)
    assert r["case"] == "CASE_E_GE_2"
    m = domkit.domination_ratio(4, 7)
    assert m["ratio"] == Fraction(1, 4)
    assert m["case"] == "EDS_MOD"
    assert m["k"] is None


def test_degenerate_rejected():
    with pytest.raises(ValueError, match="degenerate S"):
        domkit.domination_ratio(4, 2)


def test_construct_and_verify():
    c = domkit.construct_best(4, 8)
    assert c["period"] == 14
    assert c["residues"] == [0, 4, 9, 13]
    assert c["density"] == Fraction(2, 7)
    assert domkit.verify_dominating(c["period"], c["residues"], [1, 2, 8])
    assert domkit.verify_efficient(4, [0], [1, 2, 7])


def test_circulant_solver():
    g = domkit.gamma_exact(14, [1, 2, 8])
    assert g["gamma"] == 4
    assert len(g["witness"]) == 4
    assert domkit.gamma_bruteforce(10, [1, 2, 3]) == 3
    assert domkit.perfect_code(6, [2, 4]) == [0, 1]
    assert domkit.perfect_code(5, [1, 4]) is None


def test_search_and_consistency():
    r = domkit.search_ratio([1, 4], 10)
    assert r["best_ratio"] == Fraction(2, 5)
    assert r["best_period"] == 5
    c = domkit.consistency_check(5, 6, 20)
    assert c["consistent"]
    assert c["formula"] == Fraction(1, 4)
