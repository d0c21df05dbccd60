import pytest

import rankmetric as rm

F25 = {"p": 2, "lambda": 1, "n": 5}
GAB = {"field": F25, "k": 2, "s": 1, "family": "GAB"}
H_GXQ = {"field": F25, "k": 2, "s": 1, "L2": {"coeffs": ["0", "g", "0", "0", "0"]}}


def test_gamma_both_ways():
    r = rm.gamma(6, 1, 1, 3)
    assert r["result"]["closed_form"] == [2, 3, 4]
    assert r["result"]["equal"] and r["truth"]


def test_gabidulin_is_mrd():
    r = rm.check(GAB)
    assert r["result"]["is_mrd"]
    assert r["result"]["min_distance"] == 4


def test_construct_dimension():
    r = rm.construct(H_GXQ)
    assert r["result"]["dimension_over_p"] == 10
    assert r["result"]["fq_linear"]


def test_dual_closed_form_matches():
    assert rm.dual(H_GXQ)["result"]["closed_form_equals_oracle"]


def test_automorphism_order():
    r = rm.aut(H_GXQ)
    assert r["result"]["order"] == 775
    assert r["result"]["agree"]


def test_self_equivalence_and_negative():
    assert rm.equiv(H_GXQ, H_GXQ)["result"]["equivalent"]
    r = rm.equiv(GAB, H_GXQ)
    assert not r["result"]["equivalent"] and r["result"]["witness"] is None


def test_nucleus_of_gabidulin():
    r = rm.nucleus(GAB, kind="right", method="oracle")
    assert r["result"]["right"]["dimension_over_p"] == 5


def test_errors():
    with pytest.raises(ValueError):
        rm.check({"k": 2})
    with pytest.raises(ValueError):
        rm.gamma(6, 1, 1, 3, method="nope")
    with pytest.raises(rm.BudgetError):
        rm.aut(H_GXQ, list=True, budget=10)


def test_acceptance_criterion_one():
    r = rm.verify([1])
    assert r["result"]["criteria"][0]["pass"]
