"""Pythagorean triads (p1^2 + p2^2 = d^2) and tetrads (p1^2 + p2^2 + p3^2 = d^2).

Covers generation from the two-parameter family scaled by tau, exhaustive
enumeration of primitive triads (the ground truth the parametrization is
tested against), tetrad validity/orthogonality, and completion of two
orthogonal tetrads to a third via signed 2x2 minors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple


class PyTriad(NamedTuple):
    p1: int
    p2: int
    d: int

    def is_valid(self) -> bool:
        return triad_is_valid(self.p1, self.p2, self.d)

    def to_json(self) -> list[int]:
        return [self.p1, self.p2, self.d]

    @classmethod
    def from_json(cls, obj) -> "PyTriad":
        p1, p2, d = (int(v) for v in obj)
        return cls(p1, p2, d)


class PyTetrad(NamedTuple):
    p1: int
    p2: int
    p3: int
    d: int

    def is_valid(self) -> bool:
        return tetrad_is_valid(self.p1, self.p2, self.p3, self.d)

    def to_json(self) -> list[int]:
        return [self.p1, self.p2, self.p3, self.d]

    @classmethod
    def from_json(cls, obj) -> "PyTetrad":
        p1, p2, p3, d = (int(v) for v in obj)
        return cls(p1, p2, p3, d)


def triad_from_params(m: int, n: int, tau: int) -> PyTriad:
    """Triad from the two-parameter family, scaled by tau.

    The family generates the even-first-leg/odd-second-leg primitive triads
    (plus degenerate and imprimitive members for special m, n); tau scales
    legs with its sign and the hypotenuse by its magnitude.
    """
    if tau == 0:
        raise ValueError("tau must be nonzero (degenerate scale)")
    p1 = 2 * (m * m + m - n * n - n)
    p2 = 4 * m * n + 2 * m + 2 * n + 1
    d = 2 * (m * m + m + n * n + n) + 1
    return PyTriad(tau * p1, tau * p2, abs(tau) * d)


def triad_is_valid(p1: int, p2: int, d: int) -> bool:
    return d > 0 and p1 * p1 + p2 * p2 == d * d


def canonical_triad(t: PyTriad) -> PyTriad:
    """Absolute legs, even leg first; identity on triads already canonical."""
    a, b = abs(t.p1), abs(t.p2)
    if a % 2 != 0:
        a, b = b, a
    return PyTriad(a, b, t.d)


def enumerate_primitive_triads(max_d: int) -> list[PyTriad]:
    """All primitive nondegenerate triads with d <= max_d, by exhaustive search.

    Both legs positive, gcd(p1, p2, d) = 1, listed once with the even leg
    first, sorted by (d, p1).
    """
    if max_d < 1:
        raise ValueError("max_d must be >= 1")
    found = set()
    for p1 in range(1, max_d + 1):
        for p2 in range(1, max_d + 1):
            s = p1 * p1 + p2 * p2
            d = isqrt(s)
            if d * d != s or d > max_d:
                continue
            if gcd(p1, p2) != 1:
                continue
            found.add(canonical_triad(PyTriad(p1, p2, d)))
    return sorted(found, key=lambda t: (t.d, t.p1))


def tetrad_is_valid(p1: int, p2: int, p3: int, d: int) -> bool:
    return d > 0 and p1 * p1 + p2 * p2 + p3 * p3 == d * d


def tetrads_orthogonal(t1: PyTetrad, t2: PyTetrad) -> bool:
    """Zero 3-component integer dot product of the two direction parts."""
    return t1.p1 * t2.p1 + t1.p2 * t2.p2 + t1.p3 * t2.p3 == 0


def third_tetrad(t1: PyTetrad, t2: PyTetrad) -> PyTetrad:
    """Complete two orthogonal tetrads to a third, via signed 2x2 minors.

    The rational column (r1/d3, r2/d3, r3/d3) equals
    (-|p2 p3; q2 q3|, +|p1 p3; q1 q3|, -|p1 p2; q1 q2|) / (d1*d2),
    reduced to the lowest-terms integer tuple with d3 > 0. Swapping the
    arguments negates the direction part.
    """
    for t in (t1, t2):
        if t.p1 == 0 and t.p2 == 0 and t.p3 == 0:
            raise ValueError(f"degenerate zero-direction tetrad: {t}")
        if not t.is_valid():
            raise ValueError(f"invalid tetrad: {t}")
    if not tetrads_orthogonal(t1, t2):
        raise ValueError(f"tetrads are not orthogonal: {t1}, {t2}")
    dd = t1.d * t2.d
    r1 = Fraction(-(t1.p2 * t2.p3 - t1.p3 * t2.p2), dd)
    r2 = Fraction(t1.p1 * t2.p3 - t1.p3 * t2.p1, dd)
    r3 = Fraction(-(t1.p1 * t2.p2 - t1.p2 * t2.p1), dd)
    d3 = 1
    for r in (r1, r2, r3):
        d3 = d3 * r.denominator // gcd(d3, r.denominator)
    out = PyTetrad(
        int(r1 * d3),
        int(r2 * d3),
        int(r3 * d3),
        d3,
    )
    if not out.is_valid():  # cannot happen for orthogonal unit-direction inputs
        raise ValueError(f"minor completion produced an invalid tetrad: {out}")
    return out
