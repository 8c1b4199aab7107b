"""Ordered tuples over a level alphabet, their partial order, and pivot sets.

Levels run from 1 to t; level t stands for the whole sheaf, levels 1..t-1 for
the proper filtration steps.  A tuple i is below a tuple j (written i <= j in
this order) when every coordinate of i is >= the corresponding coordinate of
j; non-vanishing propagates downward, so a 0/1 table over the ordered tuples
is determined by its maximal 1-entries, the pivots.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping

Tuple_ = tuple[int, ...]


class Rel(Enum):
    BELOW = "below"  # first tuple is below the second
    ABOVE = "above"  # second tuple is below the first
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def dominated(i: Tuple_, j: Tuple_) -> bool:
    """True when i is below j, i.e. every coordinate of i is >= that of j."""
    return all(a >= b for a, b in zip(i, j))


def tuple_cmp(i: Tuple_, j: Tuple_) -> Rel:
    if len(i) != len(j):
        raise ValueError(f"arity mismatch: {len(i)} vs {len(j)}")
    if i == j:
        return Rel.EQUAL
    below = dominated(i, j)
    above = dominated(j, i)
    if below:
        return Rel.BELOW
    if above:
        return Rel.ABOVE
    return Rel.INCOMPARABLE


def ordered_tuples(arity: int, t: int) -> Iterator[Tuple_]:
    """All nondecreasing tuples of the given arity over levels 1..t."""
    return combinations_with_replacement(range(1, t + 1), arity)


def _check_tuple(tup: Tuple_, arity: int, t: int) -> None:
    if len(tup) != arity:
        raise ValueError(f"tuple {tup} does not have arity {arity}")
    if any(not 1 <= e <= t for e in tup):
        raise ValueError(f"tuple {tup} has entries outside 1..{t}")
    if any(tup[k] > tup[k + 1] for k in range(len(tup) - 1)):
        raise ValueError(f"tuple {tup} is not nondecreasing")


@dataclass(frozen=True)
class PivotSet:
    """Antichain of ordered tuples; canonical encoding of a 0/1 behavior table."""

    t: int
    arity: int
    pivots: tuple[Tuple_, ...]  # sorted, pairwise incomparable

    def __post_init__(self) -> None:
        if not self.pivots:
            raise ValueError("pivot set must be nonempty")
        for p in self.pivots:
            _check_tuple(p, self.arity, self.t)

    @staticmethod
    def from_tuples(raw: Iterable[Tuple_], t: int, arity: int) -> "PivotSet":
        """Keep only the maximal tuples; errors on empty input."""
        tuples = {tuple(p) for p in raw}
        if not tuples:
            raise ValueError("pivot set must be nonempty")
        maximal = [
            p
            for p in tuples
            if not any(q != p and dominated(p, q) for q in tuples)
        ]
        return PivotSet(t=t, arity=arity, pivots=tuple(sorted(maximal)))


def normalize_pivots(raw: Iterable[Tuple_], t: int, arity: int) -> PivotSet:
    return PivotSet.from_tuples(raw, t, arity)


def matrix_from_pivots(ps: PivotSet) -> dict[Tuple_, int]:
    """Full 0/1 table: 1 at every tuple lying below some pivot."""
    return {
        tup: int(any(dominated(tup, p) for p in ps.pivots))
        for tup in ordered_tuples(ps.arity, ps.t)
    }


def pivots_from_matrix(table: Mapping[Tuple_, int]) -> PivotSet:
    """Maximal 1-entries of a downward-closed table; inverse of matrix_from_pivots."""
    keys = list(table)
    if not keys:
        raise ValueError("empty table")
    arity = len(keys[0])
    t = max(max(k) for k in keys)
    ones = [k for k in keys if table[k]]
    if not ones:
        raise ValueError("all-zero table: the morphism may not vanish identically")
    for k in keys:
        if table[k]:
            continue
        if any(dominated(k, o) for o in ones):
            raise ValueError(f"table is not downward closed at {k}")
    return PivotSet.from_tuples(ones, t=t, arity=arity)


def project_pivots(ps: PivotSet, keep: Iterable[int]) -> PivotSet:
    """Pivot set induced on the subfiltration retaining the given levels.

    Each coordinate moves up to the smallest retained level, then levels are
    relabeled 1..|keep|+1 (the top level is always retained).
    """
    kept = sorted(set(keep))
    if any(not 1 <= k <= ps.t - 1 for k in kept):
        raise ValueError("kept levels must lie in 1..t-1")
    retained = kept + [ps.t]
    relabel = {old: new for new, old in enumerate(retained, start=1)}

    def lift(c: int) -> int:
        return relabel[next(lv for lv in retained if lv >= c)]

    projected = [tuple(lift(c) for c in p) for p in ps.pivots]
    return PivotSet.from_tuples(projected, t=len(retained), arity=ps.arity)
