from fractions import Fraction

import pytest

import lckalg


def test_d4_flags():
    alg = lckalg.d4().semidirect()
    assert alg.dim == 4
    assert alg.basis == ["U", "V", "e0", "e1"]
    report = alg.analyze()
    assert report["integrable_lck"]["state"] == "holds"
    assert report["vaisman"]["state"] == "fails"
    assert report["kahler"]["indices"] == [0, 2, 3]
    assert report["delta_residual"] == 0
    assert all(c["state"] == "holds" for c in report["claims"].values())


def test_exact_values_are_fractions():
    alg = lckalg.d4().semidirect()
    lee = alg.lee()
    assert lee["theta"] == [1, 0, 0, 0]
    assert isinstance(lee["norm_sq"], Fraction)
    assert alg.bracket([0, 1, 0, 0], [0, 0, 0, 1]) == [0, 0, 1, 0]
    assert alg.derived_series() == [4, 3, 1, 0]


def test_triple_round_trip_and_correspondence():
    t = lckalg.gb(Fraction(7, 2))
    assert t.classify4() == ("g_b", Fraction(7, 2))
    text = t.to_json()
    assert lckalg.Triple.from_json(text).to_json() == text
    t5 = t.correspond(5)
    assert t5.c == 5 and t5.check()["in_A"]
    assert t5.correspond(1).to_json() == text


def test_constructor_and_conditions():
    t = lckalg.Triple([[0, 0], [0, -1]], [["0", "1"], [0, 0]], 1)
    assert t.check()["in_A"]
    assert t.classify4()[0] == "d4"
    assert not lckalg.counterexample().check()["in_A"]


def test_counterexample_not_unimodular():
    alg = lckalg.counterexample().semidirect()
    assert not alg.is_unimodular()
    assert alg.analyze()["deta_coefficient"] == -1


def test_search_hits_are_valid():
    hits = lckalg.search(1, 1, samples=50, seed=3)
    assert hits
    assert all(h.check()["in_A"] for h in hits)


def test_verify_group():
    rows = lckalg.verify("dim4")
    assert rows and all(r[0] != "FAIL" for r in rows)
    with pytest.raises(lckalg.ParseError):
        lckalg.verify("nope")


def test_errors():
    with pytest.raises(lckalg.ParseError):
        lckalg.Algebra.from_json("{")
    with pytest.raises(lckalg.DomainError):
        lckalg.d4().correspond(0)
    with pytest.raises(lckalg.LckError):
        lckalg.Triple([[1, 0], [0, 1]], [[0, 0], [0, 0]], 1).classify4()
