"""Rank-metric codes H_{k,s}(L1, L2) over F_{q^n}.

Specs are dicts in the same JSON form the CLI reads:
{"field": {"p", "lambda", "n"}, "k", "s", "L1", "L2", "family"}.
Every call returns {"method", "result", "truth"}.
"""

import json as _json

from . import _rankmetric
from ._rankmetric import BudgetError

__all__ = ["BudgetError", "construct", "check", "dual", "adjoint", "nucleus",
           "gamma", "equiv", "aut", "verify"]


def _spec(spec):
    return spec if isinstance(spec, str) else _json.dumps(spec)


def _call(fn, *args, **kwargs):
    return _json.loads(fn(*args, **kwargs))


def construct(spec, field="", budget=0):
    return _call(_rankmetric.construct, _spec(spec), field, budget)


def check(spec, field="", budget=0):
    return _call(_rankmetric.check, _spec(spec), field, budget)


def dual(spec, method="both", field=""):
    return _call(_rankmetric.dual, _spec(spec), field, 0, method)


def adjoint(spec, field=""):
    return _call(_rankmetric.adjoint, _spec(spec), field)


def nucleus(spec, kind="both", method="both", field=""):
    return _call(_rankmetric.nucleus, _spec(spec), kind, field, method)


def gamma(n, r, s, k, method="both"):
    return _call(_rankmetric.gamma, n, r, s, k, method)


def equiv(a, b, mode="closed", all_witnesses=False, field="", budget=0):
    return _call(_rankmetric.equiv, _spec(a), _spec(b), mode, all_witnesses, field, budget)


def aut(spec, list=False, method="both", field="", budget=0):
    return _call(_rankmetric.aut, _spec(spec), list, method, field, budget)


def verify(only=()):
    return _call(_rankmetric.verify, [int(i) for i in only])
