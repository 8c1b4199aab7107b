from fractions import Fraction

import pytest

from destab.model import InstanceError
from destab.p1 import (
    P1Tensor,
    classify,
    enumerate_two_pivot_matrices,
    flag_pivots,
    is_semistable_p1,
    k_values,
    validate_p1,
)


def tensor(degrees, support, delta=1):
    return P1Tensor.make(degrees, support, delta)


def test_validate_rejects_bad_data():
    with pytest.raises(InstanceError):
        validate_p1(tensor((0, 0, 1), [(1, 1, 1)]))  # degrees do not sum to 0
    with pytest.raises(InstanceError):
        validate_p1(tensor((1, 0, -1), [(1, 1, 1)]))  # not sorted
    with pytest.raises(InstanceError):
        validate_p1(tensor((0, 0, 0), []))  # empty support
    with pytest.raises(InstanceError):
        validate_p1(tensor((0, 0, 0), [(1, 1, 1)], delta=0))
    with pytest.raises(InstanceError):
        validate_p1(tensor((-2, 1, 1), [(2, 3, 3)]))  # degree sum 3 > 0
    with pytest.raises(InstanceError):
        validate_p1(tensor((0, 0, 0), [(1, 4, 4)]))  # index out of range


def test_support_is_canonicalized():
    t = tensor((0, 0, 0), [(3, 1, 2), (2, 1, 3)])
    assert t.support == frozenset({(1, 2, 3)})


def test_flag_pivots_examples():
    # Cubic supported on the single mixed monomial: in the flag through L_1
    # then L_1 + L_2 it survives with one factor in each step.
    t = tensor((0, 0, 0), [(1, 2, 3)])
    assert flag_pivots(t, 1, 2).pivots == ((1, 2, 3),)
    # Through L_3 first, the same monomial puts its single 3 at the bottom.
    assert flag_pivots(t, 3, 2).pivots == ((1, 2, 3),)
    # Through L_2 then L_2 + L_1: the 3 only lives at the top.
    assert flag_pivots(t, 2, 1).pivots == ((1, 2, 3),)


def test_flag_pivots_two_pivot_case():
    t = tensor((0, 0, 0), [(1, 2, 3), (2, 2, 2)])
    assert flag_pivots(t, 1, 2).pivots == ((1, 2, 3), (2, 2, 2))


def test_flag_pivots_rejects_bad_indices():
    t = tensor((0, 0, 0), [(1, 1, 1)])
    with pytest.raises(InstanceError):
        flag_pivots(t, 1, 1)
    with pytest.raises(InstanceError):
        flag_pivots(t, 0, 2)


def test_k_values():
    t = tensor((0, 0, 0), [(1, 1, 2), (2, 3, 3)])
    singles, pairs = k_values(t)
    assert singles == (2, 1, 2)
    assert pairs == {(1, 2): 3, (1, 3): 2, (2, 3): 3}


def test_trivial_bundle_diagonal_support_is_semistable():
    verdict = is_semistable_p1(tensor((0, 0, 0), [(1, 2, 3)]))
    assert verdict.semistable
    assert all(not v.violated for _, _, v in verdict.flags)
    assert all(all(conds) for _, _, conds in verdict.step_conditions)


def test_trivial_bundle_concentrated_support_is_not_semistable():
    # Everything on L_1^3: the flag through L_2 kills all factors, k = 0.
    verdict = is_semistable_p1(tensor((0, 0, 0), [(1, 1, 1)]))
    assert not verdict.semistable


def test_semistable_only_if_all_k_positive():
    # One direction of the length-one test is exact: a vanishing k_i forces a
    # violated step condition, hence non-semistability.
    bound_checked = 0
    rows = classify(Fraction(1), 0)
    for row in rows:
        if min(row.k_singles) < 1:
            assert not row.semistable
            bound_checked += 1
    assert bound_checked > 0


def test_two_factor_flag_counterexample_to_length_one_sufficiency():
    # All per-summand counts are positive, yet the two-step flag through L_3
    # and then L_3 + L_1 destabilizes: length-one conditions do not suffice.
    t = tensor((0, 0, 0), [(1, 1, 1), (2, 2, 3)])
    singles, _ = k_values(t)
    assert min(singles) >= 1
    verdict = is_semistable_p1(t)
    assert not verdict.semistable
    flag = {(i, j): v for i, j, v in verdict.flags}
    bad = flag[(3, 1)]
    assert bad.violated and bad.min_value == Fraction(-1)
    assert flag_pivots(t, 3, 1).pivots == ((1, 3, 3), (2, 2, 2))
    # Each individual step condition nevertheless passes.
    assert all(all(conds) for _, _, conds in verdict.step_conditions)


def test_nontrivial_bundle_single_support_violates_middle_flag():
    t = tensor((-2, 1, 1), [(1, 3, 3)])
    verdict = is_semistable_p1(t)
    assert not verdict.semistable
    conds = {(i, j): c for i, j, c in verdict.step_conditions}
    assert not conds[(2, 1)][0]  # the L_2 step fails its length-one condition


def test_nontrivial_bundle_rank_two_step_always_destabilizes():
    # Adding the second admissible monomial fixes both line-bundle conditions
    # but the flag through L_2 then L_2 + L_3 still destabilizes.
    t = tensor((-2, 1, 1), [(1, 3, 3), (1, 2, 2)])
    verdict = is_semistable_p1(t)
    assert not verdict.semistable
    flag = {(i, j): v for i, j, v in verdict.flags}
    assert flag[(2, 3)].violated or flag[(3, 2)].violated


def test_enumerate_two_pivot_matrices():
    pairs = {frozenset(pair) for pair in enumerate_two_pivot_matrices()}
    assert pairs == {
        frozenset({(1, 1, 3), (1, 2, 2)}),
        frozenset({(1, 1, 3), (2, 2, 2)}),
        frozenset({(1, 2, 3), (2, 2, 2)}),
        frozenset({(1, 3, 3), (2, 2, 2)}),
        frozenset({(1, 3, 3), (2, 2, 3)}),
    }


def test_classify_row_shape():
    rows = classify(Fraction(1), 0)
    assert len(rows) == 1023  # all nonempty subsets of the ten cubic monomials
    assert all(row.degrees == (0, 0, 0) for row in rows)
    with pytest.raises(InstanceError):
        classify(Fraction(1), -1)


def test_classify_respects_degree_admissibility():
    for row in classify(Fraction(1), 1):
        d = row.degrees
        for m in row.support:
            assert sum(d[i - 1] for i in m) <= 0
