import pytest

import goodstein


def test_decompose_and_format():
    r = goodstein.decompose(3, 2)
    assert str(r) == "1*2^(1) + 1*2^(0)"
    assert r.value == 3
    assert r.base == 2
    assert goodstein.parse(str(r)) == r


def test_bump_keeps_mirror():
    r = goodstein.decompose(26, 3)
    assert r.mirror() == "w^(2)*2 + w^(1)*2 + 2"
    assert r.bump().mirror() == r.mirror()
    assert r.bump().base == 4


def test_big_values_cross_as_python_ints():
    r = goodstein.decompose(2**200 + 5, 2)
    assert r.value == 2**200 + 5
    # The exponent 200 is rebased too, which is far over the digit budget.
    with pytest.raises(goodstein.BudgetExceeded):
        r.rebase(3)
    assert goodstein.decompose(11, 2).rebase(3) == 3**(3 + 1) + 3 + 1


def test_golden_sequences():
    for m, values in [(1, [1, 0]), (2, [2, 2, 1, 0]), (3, [3, 3, 3, 2, 1, 0])]:
        s = goodstein.generate(m)
        assert [t["value"] for t in s["terms"]] == values
        assert s["terminated_at"] == len(values)


def test_g4_prefix_and_budget():
    s = goodstein.generate(4, budget=goodstein.Budget(max_steps=6))
    assert [t["value"] for t in s["terms"]] == [4, 26, 41, 60, 83, 109]
    assert s["outcome"] == "StepLimit"
    assert s["terminated_at"] is None


def test_elided_values_are_none():
    s = goodstein.generate(16, budget=goodstein.Budget(max_steps=5, max_digits=20))
    assert s["terms"][3]["value"] is None
    assert s["terms"][3]["step_class"] == "Increase"


def test_predict_termination():
    # G(3) reaches a plateau at term 1 (value 3, base 2) and ends at term 6.
    assert goodstein.predict_termination(3, 2, 1) == 6


def test_verify():
    reports = goodstein.verify([3], ["lemma7", "thm1"])
    assert [r["verdict"] for r in reports] == ["Holds", "Holds"]


def test_errors():
    with pytest.raises(goodstein.GoodsteinError):
        goodstein.decompose(3, 1)
    with pytest.raises(ValueError):
        goodstein.parse("1*2^(")
    with pytest.raises(goodstein.GoodsteinError):
        goodstein.verify([3], ["lemma9"])
    with pytest.raises(goodstein.GoodsteinError):
        goodstein.Budget(max_steps=0)
