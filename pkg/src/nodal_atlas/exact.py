"""Exact arithmetic primitives: binomials, factorials and univariate
polynomials in a formal degree parameter d.

Integers are plain Python ints (arbitrary precision), rationals are
``fractions.Fraction`` (always reduced, positive denominator).  Nothing
in this package ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction


def binomial(n, k):
    """Binomial coefficient, with the convention that out-of-range k gives 0.

    Both k > n and k < 0 return 0; n must be non-negative.
    """
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n):
    if n < 0:
        raise ValueError(f"factorial: n must be >= 0, got {n}")
    return math.factorial(n)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class PolyD:
    """Dense univariate polynomial over Fraction in the formal variable d.

    Coefficients are stored ascending in degree with no trailing zeros;
    the zero polynomial has an empty coefficient list and degree -1.
    Instances are immutable by convention (no method mutates self).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def variable(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyD([other])
        if not isinstance(other, PolyD):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyD([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyD([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyD([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyD([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyD([c * other for c in self.coeffs])
        if not isinstance(other, PolyD):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return PolyD()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyD(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyD([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, d):
        """Evaluate at d (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * d + c
        return acc

    def to_list(self):
        """Coefficient array ascending in degree, as 'p/q' strings."""
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        return f"PolyD({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = format_rational(mag)
            else:
                var = "d" if i == 1 else f"d^{i}"
                term = var if mag == 1 else f"{format_rational(mag)}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def format_rational(x):
    """Serialize an exact rational as a decimal string, 'p/q' when non-integral."""
    x = _as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    return Fraction(s)


def interpolate_quadratic(points):
    """The unique polynomial of degree <= 2 through three points (d_i, v_i).

    Lagrange interpolation over exact rationals; the abscissae must be
    pairwise distinct.
    """
    pts = [(_as_fraction(a), _as_fraction(v)) for a, v in points]
    if len(pts) != 3:
        raise ValueError("interpolate_quadratic needs exactly three points")
    xs = [a for a, _ in pts]
    if len(set(xs)) != 3:
        raise ValueError(f"duplicate abscissae in {xs}")
    result = PolyD()
    for i, (xi, vi) in enumerate(pts):
        basis = PolyD([1])
        for j, (xj, _) in enumerate(pts):
            if i == j:
                continue
            basis = basis * PolyD([-xj, 1]) * Fraction(1, 1) * Fraction(1, (xi - xj))
        result = result + basis * vi
    return result
