"""Split rank-3 degree-0 decorated bundles on the projective line.

The bundle is a sum of three line bundles with degrees summing to zero; the
cubic decoration is described by its support: the set of degree-3 monomials in
the summands on which it is nonzero.  A nonzero map from such a summand to the
trivial bundle exists exactly when the summand's degree is nonpositive.
Semistability reduces to the six flag filtrations 0 < L_i < L_i + L_j < E.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

from .model import FiltrationSpec, InstanceError, SheafData, StabilityParam
from .pivots import PivotSet, Tuple_, pivots_from_matrix, tuple_cmp, Rel, ordered_tuples
from .stability import CheckVerdict, check_k_semistable, decide_destabilizing

ARITY = 3
RANK = 3

Multiset = tuple[int, int, int]  # sorted summand indices in {1,2,3}


@dataclass(frozen=True)
class P1Tensor:
    degrees: tuple[int, int, int]
    support: frozenset[Multiset]
    delta: Fraction = field(default=Fraction(1))

    @staticmethod
    def make(degrees, support, delta=1) -> "P1Tensor":
        return P1Tensor(
            degrees=tuple(degrees),
            support=frozenset(tuple(sorted(m)) for m in support),
            delta=Fraction(delta),
        )


def validate_p1(tensor: P1Tensor) -> None:
    d = tensor.degrees
    if len(d) != 3 or sum(d) != 0:
        raise InstanceError(f"degrees must be three integers summing to 0, got {d}")
    if not (d[0] <= d[1] <= d[2]):
        raise InstanceError(f"degrees must be sorted nondecreasingly, got {d}")
    if tensor.delta <= 0:
        raise InstanceError("delta must be positive")
    if not tensor.support:
        raise InstanceError("support must be nonempty")
    for m in tensor.support:
        if len(m) != 3 or tuple(sorted(m)) != m or any(i not in (1, 2, 3) for i in m):
            raise InstanceError(f"invalid support multiset {m}")
        if sum(d[i - 1] for i in m) > 0:
            raise InstanceError(
                f"support multiset {m} has positive degree sum; "
                "no nonzero map to the trivial bundle exists"
            )


def flag_pivots(tensor: P1Tensor, i: int, j: int) -> PivotSet:
    """Pivot set of the flag 0 < L_i < L_i + L_j < E for the tensor's support."""
    if i == j or i not in (1, 2, 3) or j not in (1, 2, 3):
        raise InstanceError(f"flag indices must be distinct elements of 1..3, got ({i},{j})")
    allowed = {1: {i}, 2: {i, j}, 3: {1, 2, 3}}

    def entry(levels: Tuple_) -> int:
        for m in tensor.support:
            for perm in permutations(m):
                if all(x in allowed[lvl] for x, lvl in zip(perm, levels)):
                    return 1
        return 0

    table = {tup: entry(tup) for tup in ordered_tuples(ARITY, 3)}
    return pivots_from_matrix(table)


def k_values(tensor: P1Tensor) -> tuple[tuple[int, int, int], dict[tuple[int, int], int]]:
    """Per-summand and per-pair survival counts of the decoration."""
    singles = tuple(
        max(m.count(i) for m in tensor.support) for i in (1, 2, 3)
    )
    pairs = {
        (i, j): max(m.count(i) + m.count(j) for m in tensor.support)
        for i, j in combinations((1, 2, 3), 2)
    }
    return singles, pairs


def _flag_filtration(tensor: P1Tensor, i: int, j: int) -> FiltrationSpec:
    d = tensor.degrees
    return FiltrationSpec(
        arity=ARITY,
        multiplicity=1,
        total=SheafData(rank=RANK, degree=0),
        steps=(
            SheafData(rank=1, degree=d[i - 1]),
            SheafData(rank=2, degree=d[i - 1] + d[j - 1]),
        ),
    )


@dataclass(frozen=True)
class P1Verdict:
    semistable: bool
    flags: tuple[tuple[int, int, CheckVerdict], ...]
    step_conditions: tuple[tuple[int, int, tuple[bool, bool]], ...]


def is_semistable_p1(tensor: P1Tensor, strictness: str = "semi") -> P1Verdict:
    """Decide (semi)stability by running all six flag filtrations exactly."""
    validate_p1(tensor)
    sp = StabilityParam.slope(tensor.delta)
    flags = []
    steps = []
    ok = True
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                continue
            fs = _flag_filtration(tensor, i, j)
            ps = flag_pivots(tensor, i, j)
            verdict = decide_destabilizing(fs, ps, sp, strictness)
            flags.append((i, j, verdict))
            conds = check_k_semistable(fs, ps, sp, strict=(strictness == "stable"))
            steps.append((i, j, (conds[0], conds[1])))
            if verdict.violated or not all(conds):
                ok = False
    return P1Verdict(semistable=ok, flags=tuple(flags), step_conditions=tuple(steps))


def enumerate_two_pivot_matrices() -> list[tuple[Tuple_, Tuple_]]:
    """All two-element antichains of ordered 3-tuples over levels 1..3."""
    tuples = list(ordered_tuples(ARITY, 3))
    return [
        (p, q)
        for p, q in combinations(tuples, 2)
        if tuple_cmp(p, q) is Rel.INCOMPARABLE
    ]


@dataclass(frozen=True)
class ClassifiedTensor:
    degrees: tuple[int, int, int]
    support: tuple[Multiset, ...]
    semistable: bool
    k_singles: tuple[int, int, int]


def _degree_triples(bound: int) -> list[tuple[int, int, int]]:
    triples = []
    for d1 in range(-bound, 1):
        for d2 in range(d1, -d1 + 1):
            d3 = -d1 - d2
            if d2 <= d3:
                triples.append((d1, d2, d3))
    return triples


def _admissible_multisets(degrees: tuple[int, int, int]) -> list[Multiset]:
    return [
        m
        for m in combinations_with_replacement((1, 2, 3), 3)
        if sum(degrees[i - 1] for i in m) <= 0
    ]


def classify(delta=1, degree_bound: int = 0) -> list[ClassifiedTensor]:
    """Decide every valid tensor with |smallest degree| up to the bound."""
    if degree_bound < 0:
        raise InstanceError("degree bound must be nonnegative")
    rows = []
    for degrees in _degree_triples(degree_bound):
        admissible = _admissible_multisets(degrees)
        for n in range(1, len(admissible) + 1):
            for support in combinations(admissible, n):
                tensor = P1Tensor.make(degrees, support, delta)
                verdict = is_semistable_p1(tensor)
                singles, _ = k_values(tensor)
                rows.append(
                    ClassifiedTensor(
                        degrees=degrees,
                        support=tuple(sorted(support)),
                        semistable=verdict.semistable,
                        k_singles=singles,
                    )
                )
    return rows
