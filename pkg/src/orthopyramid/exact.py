"""Exact scalars and 3D linear algebra over arbitrary-precision rationals.

The scalar field is the stdlib ``fractions.Fraction`` (aliased ``Rational``
here), which is already canonical: reduced, positive denominator, unique
zero. Square roots of rationals get their own value type that stays exact
by carrying the radicand. Vectors and matrices are immutable; every
operation is a pure function, so values are safe to share across threads.

Sums of square roots are deliberately unsupported: the class is not closed
under addition, and silently approximate surd algebra is exactly the bug
this module exists to prevent. Callers work with squared quantities or
coordinates instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int]


def rational(numerator: int, denominator: int = 1) -> Fraction:
    """Reduced fraction with positive denominator; raises ZeroDivisionError on d=0."""
    return Fraction(numerator, denominator)


def format_rational(q: RationalLike) -> str:
    """Canonical string, "n/d" or bare "n" for integers."""
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    """Parse "n/d", "n", or a decimal string exactly."""
    return Fraction(str(s).strip())


def rational_pair(q: RationalLike) -> list[int]:
    """Two-integer form [numerator, denominator] of the canonical fraction."""
    q = Fraction(q)
    return [q.numerator, q.denominator]


def rational_from_pair(pair: Sequence[int]) -> Fraction:
    n, d = pair
    return Fraction(n, d)


def _is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class SqrtRational:
    """The nonnegative real square root of a nonnegative rational radicand.

    Equality and ordering compare radicands, which decides the real values
    exactly. Multiplication multiplies radicands. Conversion back to a
    Rational succeeds exactly when numerator and denominator of the reduced
    radicand are both perfect squares.
    """

    radicand: Fraction

    def __post_init__(self):
        rad = Fraction(self.radicand)
        if rad < 0:
            raise ValueError(f"negative radicand: {rad}")
        object.__setattr__(self, "radicand", rad)

    def __mul__(self, other: "SqrtRational") -> "SqrtRational":
        if not isinstance(other, SqrtRational):
            return NotImplemented
        return SqrtRational(self.radicand * other.radicand)

    def try_rational(self) -> Fraction | None:
        """Exact rational value, or None when the value is irrational."""
        n, d = self.radicand.numerator, self.radicand.denominator
        if _is_perfect_square(n) and _is_perfect_square(d):
            return Fraction(isqrt(n), isqrt(d))
        return None

    def is_rational(self) -> bool:
        return self.try_rational() is not None

    def __lt__(self, other: "SqrtRational") -> bool:
        return self.radicand < other.radicand

    def __le__(self, other: "SqrtRational") -> bool:
        return self.radicand <= other.radicand

    def __gt__(self, other: "SqrtRational") -> bool:
        return self.radicand > other.radicand

    def __ge__(self, other: "SqrtRational") -> bool:
        return self.radicand >= other.radicand

    def __float__(self) -> float:
        return float(self.radicand) ** 0.5

    def decimal(self, digits: int = 50) -> str:
        """Decimal rendering at the requested number of significant digits."""
        import mpmath

        with mpmath.workdps(digits + 10):
            value = mpmath.sqrt(
                mpmath.mpf(self.radicand.numerator) / self.radicand.denominator
            )
            return mpmath.nstr(value, digits)

    def to_json(self) -> dict:
        return {"sqrt": rational_pair(self.radicand)}

    @classmethod
    def from_json(cls, obj: dict) -> "SqrtRational":
        return cls(rational_from_pair(obj["sqrt"]))

    def __repr__(self) -> str:
        return f"sqrt({self.radicand})"


@dataclass(frozen=True)
class Vec3Q:
    """Immutable 3-vector over Rational."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        object.__setattr__(self, "z", Fraction(self.z))

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, i: int) -> Fraction:
        return (self.x, self.y, self.z)[i]

    def __add__(self, other: "Vec3Q") -> "Vec3Q":
        return Vec3Q(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3Q") -> "Vec3Q":
        return Vec3Q(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3Q":
        return Vec3Q(-self.x, -self.y, -self.z)

    def __mul__(self, k: RationalLike) -> "Vec3Q":
        k = Fraction(k)
        return Vec3Q(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    def dot(self, other: "Vec3Q") -> Fraction:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3Q") -> "Vec3Q":
        return Vec3Q(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm_sq(self) -> Fraction:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self]

    @classmethod
    def from_json(cls, obj: Sequence[str]) -> "Vec3Q":
        return cls(*(parse_rational(c) for c in obj))

    @classmethod
    def zero(cls) -> "Vec3Q":
        return cls(Fraction(0), Fraction(0), Fraction(0))


ZERO3 = Vec3Q.zero()


@dataclass(frozen=True)
class Mat3Q:
    """Immutable 3x3 matrix over Rational, row-major.

    Orthogonality is a predicate on values (see the matrix-construction
    module), not an invariant of the type.
    """

    rows: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3Q requires a 3x3 array")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]]) -> "Mat3Q":
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @classmethod
    def identity(cls) -> "Mat3Q":
        return cls.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vec3Q:
        return Vec3Q(*self.rows[i])

    def col(self, j: int) -> Vec3Q:
        return Vec3Q(self.rows[0][j], self.rows[1][j], self.rows[2][j])

    def __matmul__(self, other: "Mat3Q") -> "Mat3Q":
        return Mat3Q.from_rows(
            [
                [
                    sum(self.rows[i][k] * other.rows[k][j] for k in range(3))
                    for j in range(3)
                ]
                for i in range(3)
            ]
        )

    def mul_vec(self, v: Vec3Q) -> Vec3Q:
        return Vec3Q(*(self.row(i).dot(v) for i in range(3)))

    def transpose(self) -> "Mat3Q":
        return Mat3Q.from_rows(
            [[self.rows[j][i] for j in range(3)] for i in range(3)]
        )

    def det(self) -> Fraction:
        # cofactor expansion along the first row
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def scaled(self, k: RationalLike) -> "Mat3Q":
        k = Fraction(k)
        return Mat3Q.from_rows([[v * k for v in row] for row in self.rows])

    def __neg__(self) -> "Mat3Q":
        return self.scaled(-1)

    def to_json(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.rows]

    @classmethod
    def from_json(cls, obj: Sequence[Sequence[str]]) -> "Mat3Q":
        return cls.from_rows([[parse_rational(v) for v in row] for row in obj])


def triple_product(a: Vec3Q, b: Vec3Q, c: Vec3Q) -> Fraction:
    """Scalar triple product; equals the determinant of the matrix with columns a, b, c."""
    return a.cross(b).dot(c)
