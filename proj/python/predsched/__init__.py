"""Exact simulation of LPPT and PPRR with predictions, offline optima and
competitive-ratio bounds. All times are fractions.Fraction."""

import json
from fractions import Fraction

from . import _predsched as _core
from ._predsched import InvalidInput

__all__ = [
    "InvalidInput",
    "Instance",
    "alpha_squared",
    "bound",
    "lppt",
    "mandatory_count",
    "opt_nonpreemptive",
    "opt_preemptive",
    "pprr",
    "report",
    "search",
    "worst_case_family_lppt",
]


def _s(v):
    if isinstance(v, float):
        raise TypeError("floats are not accepted; use int, str or Fraction")
    return str(Fraction(v))


class Instance:
    def __init__(self, m, p, q=None):
        self.m = int(m)
        self.p = [Fraction(v) for v in map(_s, p)]
        self.q = self.p[:] if q is None else [Fraction(v) for v in map(_s, q)]

    @classmethod
    def from_json(cls, text):
        doc = json.loads(_core.parse_instance(text))
        return cls(doc["m"], [j["p"] for j in doc["jobs"]], [j["q"] for j in doc["jobs"]])

    def _args(self):
        return self.m, [str(v) for v in self.p], [str(v) for v in self.q]

    @property
    def digest(self):
        return _core.instance_digest(*self._args())

    def __repr__(self):
        return f"Instance(m={self.m}, p={[str(v) for v in self.p]}, q={[str(v) for v in self.q]})"


def alpha_squared(inst):
    return Fraction(_core.alpha_squared(*inst._args()))


def lppt(inst):
    """(makespan, assignments) with assignments as [{job, machine, start}]."""
    mk, sched = _core.lppt(*inst._args())
    rows = json.loads(sched)
    for r in rows:
        r["start"] = Fraction(r["start"])
    return Fraction(mk), rows


def pprr(inst, residual=False):
    """(makespan, segments) of the realized discrete preemptive schedule."""
    mk, segs = _core.pprr(*inst._args(), residual)
    rows = json.loads(segs)
    for r in rows:
        r["start"] = Fraction(r["start"])
        r["end"] = Fraction(r["end"])
    return Fraction(mk), rows


def mandatory_count(g, q):
    return _core.mandatory_count(g, [_s(v) for v in q])


def opt_preemptive(inst):
    return Fraction(_core.opt_preemptive(inst.m, [str(v) for v in inst.p]))


def opt_nonpreemptive(inst, node_budget=None):
    """(makespan, certified_optimal)."""
    mk, ok = _core.opt_nonpreemptive(inst.m, [str(v) for v in inst.p], node_budget)
    return Fraction(mk), ok


def bound(formula, m, x):
    """(value, piece) of a bound formula at x = alpha^2."""
    value, piece = _core.bound(formula, m, _s(x))
    return Fraction(value), piece


def report(inst, algorithm="lppt"):
    doc = json.loads(_core.report(*inst._args(), algorithm))
    for key in ("algorithm_makespan", "optimal_makespan", "ratio", "alpha_squared"):
        doc[key] = Fraction(doc[key])
    doc["bound"]["value"] = Fraction(doc["bound"]["value"])
    return doc


def worst_case_family_lppt(m):
    return Instance.from_json(_core.worst_case_family_lppt(m))


def search(algorithm, m, x, budget=10_000, seed=1):
    """(best_ratio, instance) from the adversarial local search."""
    ratio, text = _core.search(algorithm, m, _s(x), budget, seed)
    return Fraction(ratio), Instance.from_json(text)
