"""Exact univariate polynomial arithmetic over the integers and rationals.

Coefficients are Python ints or ``fractions.Fraction``; floats are rejected
outright so no count can ever pass through floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Coeff = Union[int, Fraction]


def _as_exact(c) -> Coeff:
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient {c!r} is not an exact integer or Fraction")


class Poly:
    """Polynomial in one variable ``n`` with exact coefficients.

    ``coeffs[i]`` is the coefficient of ``n**i``; trailing zeros are
    stripped and the zero polynomial has an empty coefficient tuple.
    Instances are immutable; equality is coefficient-wise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_as_exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Coeff) -> Poly:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        c = _as_exact(other)
        return Poly(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out = Poly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, n: Coeff) -> Coeff:
        """Evaluate by Horner's rule; exact for int and Fraction arguments."""
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def scale_argument(self, k: Coeff) -> Poly:
        """The polynomial p(k*n): coefficient i is multiplied by k**i."""
        return Poly(tuple(c * k**i for i, c in enumerate(self.coeffs)))

    def coeff_list(self) -> list[Coeff]:
        """Ascending-power coefficient list, ``[c0, c1, ...]``."""
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "n" if i == 1 else f"n^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


def interpolate(points: Iterable[tuple[Coeff, Coeff]]) -> Poly:
    """Least-degree polynomial through the given points, by Newton's
    divided differences in exact rational arithmetic.

    Trailing zero coefficients are normalized away, so data sampled from a
    low-degree polynomial comes back at its true degree.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if not pts:
        return Poly()
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("sample points must have distinct x values")
    dd = [y for _, y in pts]
    k = len(pts)
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = Poly()
    basis = Poly((1,))
    for i in range(k):
        if i > 0:
            basis = basis * Poly((-xs[i - 1], 1))
        poly = poly + dd[i] * basis
    return poly
