"""Shared fixtures-in-spirit: seeded random instance generators and known data."""

from __future__ import annotations

import random
from fractions import Fraction

from destab import FiltrationSpec, PivotSet, SheafData, StabilityParam
from destab.pivots import ordered_tuples

# A rank-6 bundle with three strictly destabilizing steps; the smallest known
# instance where no proper subfiltration destabilizes.
RANK6_INSTANCE = {
    "mode": "slope",
    "arity": 4,
    "multiplicity": 1,
    "total": {"rank": 6, "degree": 36},
    "steps": [
        {"rank": 1, "degree": 6},
        {"rank": 3, "degree": 18},
        {"rank": 5, "degree": 30},
    ],
    "delta": "1",
    "pivots": [[1, 1, 4, 4], [2, 2, 2, 4], [3, 3, 3, 3]],
}


def rank6() -> tuple[FiltrationSpec, PivotSet, StabilityParam]:
    fs = FiltrationSpec(
        arity=4,
        multiplicity=1,
        total=SheafData(rank=6, degree=36),
        steps=(
            SheafData(rank=1, degree=6),
            SheafData(rank=3, degree=18),
            SheafData(rank=5, degree=30),
        ),
    )
    ps = PivotSet.from_tuples(
        [(1, 1, 4, 4), (2, 2, 2, 4), (3, 3, 3, 3)], t=4, arity=4
    )
    return fs, ps, StabilityParam.slope(1)


def random_filtration(
    rng: random.Random,
    max_rank: int = 8,
    max_arity: int = 4,
    max_steps: int = 4,
    min_steps: int = 1,
    degree_span: int = 10,
) -> FiltrationSpec:
    r = rng.randint(min_steps + 1, max_rank)
    s = rng.randint(min_steps, min(max_steps, r - 1))
    ranks = sorted(rng.sample(range(1, r), s))
    return FiltrationSpec(
        arity=rng.randint(1, max_arity),
        multiplicity=rng.randint(1, 3),
        total=SheafData(rank=r, degree=rng.randint(-degree_span, degree_span)),
        steps=tuple(
            SheafData(rank=rk, degree=rng.randint(-degree_span, degree_span))
            for rk in ranks
        ),
    )


def random_pivots(
    rng: random.Random, arity: int, t: int, max_pivots: int = 4
) -> PivotSet:
    pool = list(ordered_tuples(arity, t))
    chosen = rng.sample(pool, rng.randint(1, min(max_pivots, len(pool))))
    return PivotSet.from_tuples(chosen, t=t, arity=arity)


def random_weights(rng: random.Random, s: int) -> tuple[Fraction, ...]:
    return tuple(
        Fraction(rng.randint(1, 12), rng.randint(1, 12)) for _ in range(s)
    )


def random_delta(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 8), rng.randint(1, 4))
