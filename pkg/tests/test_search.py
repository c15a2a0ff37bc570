import pytest

from dccd import (
    ParameterError,
    SearchBudgetExceeded,
    SearchRefused,
    classify,
    exhaustive_min_blocks,
    verify_m_change,
)
from dccd.search import BUDGET_ENV

from .oracles import naive_is_m_change, naive_pair_counts


def test_seven_points_six_blocks_impossible():
    assert exhaustive_min_blocks(7, 3, True, 6) is None


def test_seven_points_seven_blocks():
    d, b = exhaustive_min_blocks(7, 3, True, 7)
    assert b == 7
    assert sorted(d.blocks[0]) == [0, 1, 2]
    assert naive_is_m_change(d.blocks, 3, 2, True)
    assert set(naive_pair_counts(7, d.blocks, True).values()) == {1}


def test_six_four_three():
    d, b = exhaustive_min_blocks(6, 4, True, 3)
    assert b == 3 and classify(d).tight


def test_linear_seven_three():
    d, b = exhaustive_min_blocks(7, 3, False, 8)
    assert b == 7 and not d.circular and classify(d).tight


def test_single_change_search():
    d, b = exhaustive_min_blocks(7, 3, False, 10, m=1)
    assert b == 10
    assert verify_m_change(d, 1) and classify(d).covers_all


@pytest.mark.parametrize("k", [3, 5])
def test_odd_k_has_no_tight_cdccd(k):
    assert exhaustive_min_blocks(2 * k - 2, k, True, k - 1) is None


@pytest.mark.parametrize("k", [4, 6])
def test_even_k_has_tight_cdccd(k):
    d, b = exhaustive_min_blocks(2 * k - 2, k, True, k - 1)
    assert b == k - 1 and classify(d).tight


def test_single_block_when_v_equals_k():
    d, b = exhaustive_min_blocks(4, 4, True, 3)
    assert b == 1 and d.b == 1


def test_deterministic():
    a = exhaustive_min_blocks(7, 3, True, 7)[0]
    b = exhaustive_min_blocks(7, 3, True, 7)[0]
    assert a == b


@pytest.mark.parametrize("v,k,circ,bmax", [(7, 3, True, 7), (6, 4, True, 3), (8, 4, False, 8), (9, 3, True, 12)])
def test_results_verify(v, k, circ, bmax):
    found = exhaustive_min_blocks(v, k, circ, bmax)
    if found is None:
        return
    d, _ = found
    cls = classify(d)
    assert cls.covers_all and verify_m_change(d, 2)


def test_refuses_large_without_override():
    with pytest.raises(SearchRefused):
        exhaustive_min_blocks(20, 6, True, 5)
    with pytest.raises(SearchRefused):
        exhaustive_min_blocks(7, 3, True, 13)


def test_budget_error_distinct_from_none():
    with pytest.raises(SearchBudgetExceeded):
        exhaustive_min_blocks(9, 3, True, 12, node_budget=50)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "10")
    with pytest.raises(SearchBudgetExceeded):
        exhaustive_min_blocks(7, 3, True, 7)
    monkeypatch.setenv(BUDGET_ENV, "zero")
    with pytest.raises(ParameterError):
        exhaustive_min_blocks(7, 3, True, 7)


def test_bad_parameters():
    with pytest.raises(ParameterError):
        exhaustive_min_blocks(3, 4, True, 2)
    with pytest.raises(ParameterError):
        exhaustive_min_blocks(7, 3, True, 0)
