"""Acceptance gate: one test per criterion, exact arithmetic, zero tolerances.

Criterion 8 bundles several independent claims, so it is split into lettered
sub-tests.  Two of its sub-claims are mathematically false as stated (each
xfail reason carries the counterexample); they are asserted faithfully and
marked strict-xfail rather than weakened.
"""

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import pytest

from destab import (
    StabilityParam,
    check_k_semistable,
    check_splitting,
    constants,
    decide_destabilizing,
    is_critical,
    k_of_level,
    mu_via_gamma,
    mu_via_pivots,
    objective,
    project_pivots,
    r_value,
    reduce_destabilizer,
)
from destab.combinatorics import (
    brute_maxp,
    f_atx,
    maxp,
    sum_check,
    verify_pascal,
    verify_q_identity,
)
from destab.p1 import (
    P1Tensor,
    classify,
    enumerate_two_pivot_matrices,
    flag_pivots,
    is_semistable_p1,
)
from destab.pivots import dominated, ordered_tuples
from destab.stability import STRICTLY_DESTABILIZED
from util import (
    random_delta,
    random_filtration,
    random_pivots,
    random_weights,
    rank6,
)

F = Fraction


def test_criterion_01_rank6_exact_values():
    fs, ps, sp = rank6()
    weights = (F(4), F(2), F(6))
    assert constants(fs, sp) == [F(-4), F(-12), F(-20)]
    assert [k_of_level(ps, lvl) for lvl in (1, 2, 3)] == [2, 3, 4]
    rmax, _ = r_value(fs, ps, weights)
    assert rmax == F(24)
    assert objective(fs, ps, weights, sp) == F(-16)


def test_criterion_02_rank6_sharpness():
    fs, ps, sp = rank6()
    verdict = decide_destabilizing(fs, ps, sp)
    assert verdict.classification == STRICTLY_DESTABILIZED

    for keep in combinations((1, 2, 3), 2):
        sub = decide_destabilizing(
            fs.substeps(keep), project_pivots(ps, keep), sp
        )
        assert not sub.violated
    for keep in ((1,), (2,), (3,)):
        sub = decide_destabilizing(
            fs.substeps(keep), project_pivots(ps, keep), sp
        )
        assert not sub.violated

    subset, _, trace = reduce_destabilizer(fs, ps, sp)
    assert subset == (1, 2, 3)
    assert len(trace) == 3 and all(not violated for _, violated in trace)


def test_criterion_03_mu_cross_check():
    rng = random.Random(20250301)
    for _ in range(500):
        fs = random_filtration(rng, max_rank=8, max_arity=4, max_steps=4)
        ps = random_pivots(rng, fs.arity, fs.t)
        w = random_weights(rng, fs.s)
        assert mu_via_gamma(fs, ps, w) == mu_via_pivots(fs, ps, w)


def test_criterion_04_reducer_returns_proper_violating_subset():
    rng = random.Random(20250302)
    found = 0
    while found < 200:
        fs = random_filtration(rng, min_steps=2, degree_span=12)
        ps = random_pivots(rng, fs.arity, fs.t, max_pivots=fs.s - 1)
        if len(ps.pivots) > fs.s - 1:
            continue
        sp = StabilityParam.slope(random_delta(rng))
        verdict = decide_destabilizing(fs, ps, sp)
        if not verdict.violated:
            continue
        subset, _, _ = reduce_destabilizer(fs, ps, sp)
        assert len(subset) < fs.s
        sub = decide_destabilizing(
            fs.substeps(subset), project_pivots(ps, subset), sp
        )
        assert sub.violated
        found += 1


def test_criterion_05_one_pivot_additivity():
    rng = random.Random(20250303)
    for _ in range(300):
        fs = random_filtration(rng)
        ps = random_pivots(rng, fs.arity, fs.t, max_pivots=1)
        sp = StabilityParam.slope(random_delta(rng))
        w = random_weights(rng, fs.s)
        total = objective(fs, ps, w, sp)
        parts = sum(
            (
                objective(
                    fs.substeps([i]),
                    project_pivots(ps, [i]),
                    (w[i - 1],),
                    sp,
                )
                for i in range(1, fs.s + 1)
            ),
            F(0),
        )
        assert total == parts


def test_criterion_06_combinatorics():
    values = {x: f_atx(3, 3, x) for x in range(3, 10)}
    assert values[6] == 2
    assert values[6] == max(values.values())

    assert all(maxp(2, t) == (t + 1) // 2 for t in range(1, 21))

    from math import comb

    for a in range(1, 6):
        for t in range(1, 9):
            if comb(t + a - 1, a) <= 24:
                assert maxp(a, t) == brute_maxp(a, t)

    for a in range(1, 7):
        for t in range(1, 7):
            ok, _, _ = verify_q_identity(a, t)
            assert ok

    for a in range(1, 9):
        for t in range(1, 9):
            assert sum_check(a, t)

    for a in range(2, 7):
        for t in range(2, 7):
            for x in range(0, a * t + 3):
                assert verify_pascal(a, t, x)


def test_criterion_07_equal_sum_incomparability():
    for a in range(1, 5):
        for t in range(1, 6):
            for p, q in combinations(ordered_tuples(a, t), 2):
                if sum(p) == sum(q):
                    assert not dominated(p, q) and not dominated(q, p)


def test_criterion_08a_exactly_five_two_pivot_matrices():
    pairs = {frozenset(pair) for pair in enumerate_two_pivot_matrices()}
    assert pairs == {
        frozenset({(1, 1, 3), (1, 2, 2)}),
        frozenset({(1, 1, 3), (2, 2, 2)}),
        frozenset({(1, 2, 3), (2, 2, 2)}),
        frozenset({(1, 3, 3), (2, 2, 2)}),
        frozenset({(1, 3, 3), (2, 2, 3)}),
    }


@lru_cache(maxsize=None)
def classified(bound: int):
    return classify(F(1), bound)


@pytest.mark.xfail(
    strict=True,
    reason=(
        "the stated equivalence is false: support {(1,1,1),(2,2,3)} has "
        "min_i k_i = 1, yet the flag through L3 and then L3+L1 has pivots "
        "{(1,3,3),(2,2,2)} and value -3a1-6a2+3*max(a1+a2,3a2) = -1 < 0 at "
        "weights (2/3,1/3); only 'semistable implies min_i k_i >= 1' holds "
        "(78 of the 1023 supports violate the converse)"
    ),
)
def test_criterion_08b_trivial_bundle_semistable_iff_k_positive():
    for row in classified(0):
        assert row.semistable == (min(row.k_singles) >= 1)


def test_criterion_08c_critical_flag_with_full_k():
    # Trivial bundle whose flag through L1 and then L1+L2 is critical with
    # k_2 = 3: the predicted pivot pair appears and semistability survives.
    tensor = P1Tensor.make((0, 0, 0), [(1, 2, 3), (2, 2, 2)], 1)
    ps = flag_pivots(tensor, 1, 2)
    assert ps.pivots == ((1, 2, 3), (2, 2, 2))

    from destab.p1 import _flag_filtration

    fs = _flag_filtration(tensor, 1, 2)
    assert is_critical(fs, ps, (F(1), F(1)))
    sp = StabilityParam.slope(F(1))
    assert not decide_destabilizing(fs, ps, sp).violated
    assert check_k_semistable(fs, ps, sp) == [True, True]
    assert is_semistable_p1(tensor).semistable


@pytest.mark.xfail(
    strict=True,
    reason=(
        "no tensor on degrees (-2,1,1) is semistable: the rank-two step "
        "L2+L3 has degree 2 and at most two surviving factors, so its "
        "length-one condition 3*(2-2*1) >= 2*(0-3*1) reads 0 <= -6 and "
        "fails; the flag through L2 and then L2+L3 destabilizes with "
        "minimum -6"
    ),
)
def test_criterion_08d_classify_marks_nontrivial_support_semistable():
    target = None
    for row in classified(2):
        if row.degrees == (-2, 1, 1) and row.support == ((1, 2, 2), (1, 3, 3)):
            target = row
    assert target is not None
    assert target.semistable


def test_criterion_08e_classify_marks_single_support_not_semistable():
    target = None
    for row in classified(2):
        if row.degrees == (-2, 1, 1) and row.support == ((1, 3, 3),):
            target = row
    assert target is not None
    assert not target.semistable


def test_criterion_09_splitting_certificate():
    fs, ps, _ = rank6()
    splits, ray = check_splitting(fs, ps)
    assert splits and ray is not None
    # The certificate is a point on the simplex proportional to (2, 1, 3).
    assert ray[0] / 2 == ray[1] == ray[2] / 3 > 0
    # Substituting back: every pivot attains the same cumulative-weight sum.
    sums = {
        sum(
            (sum(1 for c in p if c <= i) * ray[i - 1] for i in (1, 2, 3)),
            F(0),
        )
        for p in ps.pivots
    }
    assert len(sums) == 1
