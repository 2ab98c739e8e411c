from fractions import Fraction

import pytest

import predsched as ps


def test_family_ratio_m2():
    inst = ps.worst_case_family_lppt(2)
    assert ps.alpha_squared(inst) == 4
    mk, rows = ps.lppt(inst)
    assert mk == 3
    assert len(rows) == 3
    opt, certified = ps.opt_nonpreemptive(inst)
    assert (opt, certified) == (2, True)
    rep = ps.report(inst)
    assert rep["ratio"] == Fraction(3, 2)
    assert rep["compliant"]


def test_pprr_examples():
    mk, segs = ps.pprr(ps.Instance(2, [2, 1, 1], [2, 1, 1]))
    assert mk == 2
    assert all(s["end"] > s["start"] for s in segs)
    mk, _ = ps.pprr(ps.Instance(2, [1, 1, 1], [2, 1, 1]))
    assert mk == Fraction(3, 2)
    assert ps.mandatory_count(2, [2, 1, 1]) == 1


def test_bounds_and_aliases():
    assert ps.bound("thm2", 2, 1)[0] == Fraction(7, 6)
    assert ps.bound("ub_pprr", 3, 2)[0] == Fraction(4, 3)
    assert ps.bound("lb_preemptive", 2, 2)[0] == Fraction(5, 4)
    assert ps.bound("thm1", 3, "5/4")[0] >= 1
    with pytest.raises(ValueError):
        ps.bound("nope", 2, 1)
    with pytest.raises(ValueError):
        ps.bound("thm1", 2, Fraction(1, 2))


def test_oracles_and_rationals():
    inst = ps.Instance(2, ["3/2", "1/2", 1])
    assert ps.opt_preemptive(inst) == Fraction(3, 2)
    assert ps.opt_nonpreemptive(inst)[0] == Fraction(3, 2)
    assert ps.Instance.from_json(
        '{"m":2,"jobs":[{"p":"3/2","q":"3/2"},{"p":"1/2","q":"1/2"},{"p":1,"q":1}]}'
    ).digest == inst.digest


def test_invalid_input():
    with pytest.raises(ValueError):
        ps.Instance(1, [1], [1]).digest
    with pytest.raises(ValueError):
        ps.Instance.from_json("{")
    with pytest.raises(TypeError):
        ps.Instance(2, [1.5])


def test_search_is_reproducible():
    r1, i1 = ps.search("lppt", 2, 4, budget=500, seed=3)
    r2, i2 = ps.search("lppt", 2, 4, budget=500, seed=3)
    assert r1 == r2 and i1.digest == i2.digest
    assert 1 <= r1 <= Fraction(3, 2)
    assert ps.report(i1)["ratio"] == r1
