"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg

__all__ = ["Polynomial", "interpolate"]


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending degree order: coeffs[i] multiplies t**i.

    Trailing zero coefficients are kept as given, so a caller that wants a
    fixed-length coefficient vector can have one.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return 0

    def integer_coeffs(self) -> tuple[int, ...]:
        """The coefficients as ints; raises if any is not integral."""
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError(f"non-integral coefficients: {self.coeffs}")
        return tuple(int(c) for c in self.coeffs)

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)


def interpolate(points: Sequence[tuple[int, int | Fraction]]) -> Polynomial:
    """The unique polynomial of degree < len(points) through the given points.

    Solves the Vandermonde system exactly; the sample abscissas must be
    pairwise distinct.
    """
    if not points:
        raise ValueError("need at least one sample point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("sample points must have distinct abscissas")
    n = len(points)
    vand = [[Fraction(x) ** j for j in range(n)] for x in xs]
    sol = linalg.solve(vand, [y for _, y in points])
    assert sol is not None
    return Polynomial(tuple(sol))
