"""Univariate polynomials with rational coefficients, ordered asymptotically.

Two polynomials are compared by how they behave for large arguments, i.e.
by the sign of the leading coefficient of their difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _trim(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


@dataclass(frozen=True)
class UniPoly:
    """Canonical polynomial: coefficients constant-term first, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable[Scalar]) -> "UniPoly":
        return UniPoly(_trim(tuple(Fraction(c) for c in coeffs)))

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def constant(c: Scalar) -> "UniPoly":
        return UniPoly.from_coeffs([c])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(_trim(tuple(x + y for x, y in zip(a, b))))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def scale(self, c: Scalar) -> "UniPoly":
        c = Fraction(c)
        if c == 0:
            return UniPoly(())
        return UniPoly(tuple(c * x for x in self.coeffs))

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def poly_cmp(p: UniPoly, q: UniPoly) -> int:
    """Asymptotic comparison: -1 if p(x) < q(x) for x >> 0, 0 if equal, +1 otherwise."""
    lead = (p - q).leading
    if lead < 0:
        return -1
    if lead > 0:
        return 1
    return 0
