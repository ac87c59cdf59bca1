"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`, which is already canonical (reduced,
positive denominator) and backed by Python's arbitrary precision integers.
Vectors are plain tuples of fractions; matrices carry their shape explicitly so
that ``0 x n`` and ``m x 0`` matrices stay well defined.
"""

from __future__ import annotations

import re
from math import lcm
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
RatVec = tuple  # tuple[Fraction, ...]
RatLike = Union[Fraction, int, str]

_RAT_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats (and bools) are refused: a float has already lost exactness.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RAT_RE.match(value):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(value.replace(" ", ""))
    raise TypeError(f"cannot make a rational from {type(value).__name__}")


def format_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values: Iterable[RatLike]) -> RatVec:
    return tuple(rat(v) for v in values)


def zeros(n: int) -> RatVec:
    return (Fraction(0),) * n


@dataclass(frozen=True)
class RatMat:
    """Dense row-major rational matrix with an explicit shape."""

    rows: int
    cols: int
    data: tuple  # tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionError(f"entries do not form a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[RatLike]], cols: int | None = None) -> RatMat:
        data = tuple(vec(r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionError("column count is ambiguous for an empty row list")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMat:
        return cls(rows, cols, tuple(zeros(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> RatMat:
        one, zero = Fraction(1), Fraction(0)
        return cls(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def row(self, i: int) -> RatVec:
        return self.data[i]

    def column(self, j: int) -> RatVec:
        return tuple(r[j] for r in self.data)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __iter__(self):
        return iter(self.data)

    def transpose(self) -> RatMat:
        return RatMat(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else
                      tuple(() for _ in range(self.cols)))

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.data for v in r)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for r in self.data for v in r)

    def tolist(self) -> list:
        return [list(r) for r in self.data]


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise DimensionError(f"dot of vectors with dims {len(x)} and {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def mat_vec(A: RatMat, x: Sequence[Fraction]) -> RatVec:
    if A.cols != len(x):
        raise DimensionError(f"{A.rows}x{A.cols} matrix times vector of dim {len(x)}")
    return tuple(dot(r, x) for r in A.data)


def vec_mat(y: Sequence[Fraction], A: RatMat) -> RatVec:
    """Row vector times matrix, ``y^T A``."""
    if A.rows != len(y):
        raise DimensionError(f"vector of dim {len(y)} times {A.rows}x{A.cols} matrix")
    out = [Fraction(0)] * A.cols
    for coef, r in zip(y, A.data):
        if coef:
            for j, v in enumerate(r):
                out[j] += coef * v
    return tuple(out)


def mat_mul(A: RatMat, B: RatMat) -> RatMat:
    if A.cols != B.rows:
        raise DimensionError(f"{A.rows}x{A.cols} times {B.rows}x{B.cols}")
    return RatMat(A.rows, B.cols, tuple(vec_mat(r, B) for r in A.data))


def vec_cmp(x: Sequence[Fraction], y: Sequence[Fraction], rel) -> bool:
    """Compare two vectors under one of the four relation kinds.

    ``rel`` is a :class:`alterna.model.RelationKind` (or its short name).
    ``LT`` is weak dominance: ``x <= y`` componentwise and ``x != y``.
    """
    if len(x) != len(y):
        raise DimensionError(f"comparing vectors with dims {len(x)} and {len(y)}")
    name = getattr(rel, "value", rel)
    if name == "eq":
        return all(a == b for a, b in zip(x, y))
    if name == "le":
        return all(a <= b for a, b in zip(x, y))
    if name == "lt":
        return all(a <= b for a, b in zip(x, y)) and any(a != b for a, b in zip(x, y))
    if name == "ll":
        return all(a < b for a, b in zip(x, y))
    raise ValueError(f"unknown relation {rel!r}")


def normalize_row(a: Sequence[Fraction], b: Fraction) -> tuple[RatVec, Fraction, Fraction]:
    """Scale ``a.x <= b`` by ``s > 0`` so the first nonzero coefficient is +-1.

    Returns ``(s*a, s*b, s)``. A zero row is returned unchanged with ``s = 1``.
    """
    a = tuple(a)
    lead = next((v for v in a if v != 0), None)
    if lead is None:
        return a, b, Fraction(1)
    s = 1 / abs(lead)
    return tuple(v * s for v in a), b * s, s


def lcm_denominator(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v.denominator)
    return out
