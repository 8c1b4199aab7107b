"""Partition counts, bounded-partition level sizes, maximal antichains, q-binomials.

The level-size function f(a, t, x) counts partitions of x into exactly a parts
each at most t; its maximum over x is the largest antichain in the poset of
ordered a-tuples over 1..t.  The q-binomial coefficient packages the same
counts as polynomial coefficients, computed here by an independent route
(exact polynomial division) so the identity checks are genuine cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .model import guard_limit
from .pivots import Tuple_, dominated, ordered_tuples

QPoly = tuple[int, ...]  # nonnegative integer coefficients, constant term first


@lru_cache(maxsize=None)
def partition_count(k: int, n: int) -> int:
    """Number of partitions of n into exactly k parts."""
    if k == 0 and n == 0:
        return 1
    if k <= 0 or n <= 0:
        return 0
    return partition_count(k, n - k) + partition_count(k - 1, n - 1)


@lru_cache(maxsize=None)
def f_atx(a: int, t: int, x: int) -> int:
    """Partitions of x into exactly a parts each at most t; 0 outside [a, a*t]."""
    if a < 1 or t < 1:
        raise ValueError("a and t must be >= 1")
    if x < a or x > a * t:
        return 0
    if a == 1:
        return 1  # 1 <= x <= t already holds here
    if t == 1:
        return 1  # x == a already holds here
    overflow = sum(f_atx(a - 1, k, x - k) for k in range(t + 1, x - a + 2))
    return partition_count(a, x) - overflow


def maxp(a: int, t: int) -> int:
    """Largest possible number of maximal elements of a subset of ordered tuples."""
    if a < 1 or t < 1:
        raise ValueError("a and t must be >= 1")
    if a == 1:
        return 1
    if a == 2:
        return (t + 1) // 2
    return max(f_atx(a, t, x) for x in range(a, a * t + 1))


def brute_maxp(a: int, t: int) -> int:
    """Maximum antichain size by exhaustive search; oracle for maxp.

    Guarded by instance size (default 24 tuples, DESTAB_GUARD overrides).
    """
    tuples = list(ordered_tuples(a, t))
    limit = guard_limit(24)
    if len(tuples) > limit:
        raise ValueError(
            f"instance too large for exhaustive search: {len(tuples)} tuples > {limit}"
        )
    incomparable = {
        p: frozenset(
            q for q in tuples if q != p and not dominated(p, q) and not dominated(q, p)
        )
        for p in tuples
    }
    best = 0

    def search(candidates: list[Tuple_], size: int) -> None:
        nonlocal best
        if size + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        head, rest = candidates[0], candidates[1:]
        search([c for c in rest if c in incomparable[head]], size + 1)
        search(rest, size)

    search(tuples, 0)
    return best


def _qint(n: int) -> list[int]:
    return [1] * n if n > 0 else [0]


def _pmul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _pdivexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    while den and den[-1] == 0:
        den.pop()
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c, rem = divmod(num[i + len(den) - 1], den[-1])
        if rem:
            raise ArithmeticError("division is not exact")
        quot[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("division leaves a remainder")
    return quot


def gaussian_binomial(n: int, k: int) -> QPoly:
    """q-binomial coefficient as an integer polynomial, by exact division."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num: list[int] = [1]
    den: list[int] = [1]
    for i in range(k):
        num = _pmul(num, _qint(n - i))
        den = _pmul(den, _qint(i + 1))
    quot = _pdivexact(num, den)
    while quot and quot[-1] == 0:
        quot.pop()
    return tuple(quot)


def verify_q_identity(a: int, t: int) -> tuple[bool, QPoly, QPoly]:
    """Compare the q-binomial (a+t-1 choose a) with the generating polynomial of f."""
    lhs = gaussian_binomial(a + t - 1, a)
    rhs_list = [f_atx(a, t, x) for x in range(a, a * t + 1)]
    while rhs_list and rhs_list[-1] == 0:
        rhs_list.pop()
    rhs = tuple(rhs_list)
    return lhs == rhs, lhs, rhs


def verify_pascal(a: int, t: int, x: int) -> bool:
    """Pascal-like recurrence f(a,t,x) = f(a,t-1,x) + f(a-1,t,x-t)."""
    if a < 2 or t < 2:
        raise ValueError("recurrence needs a >= 2 and t >= 2")
    return f_atx(a, t, x) == f_atx(a, t - 1, x) + f_atx(a - 1, t, x - t)


@dataclass(frozen=True)
class LevelSet:
    a: int
    t: int
    x: int
    tuples: tuple[Tuple_, ...]


def level_set(a: int, t: int, x: int) -> LevelSet:
    """All ordered tuples with the given entry sum; an antichain of size f(a,t,x)."""
    members = tuple(tup for tup in ordered_tuples(a, t) if sum(tup) == x)
    return LevelSet(a=a, t=t, x=x, tuples=members)


def sum_check(a: int, t: int) -> bool:
    """q=1 specialization: sum of f equals a plain binomial, maximum at a(t+1)/2."""
    values = {x: f_atx(a, t, x) for x in range(a, a * t + 1)}
    if sum(values.values()) != math.comb(a + t - 1, a):
        return False
    xm = a * (t + 1) // 2
    return values[xm] == max(values.values())
