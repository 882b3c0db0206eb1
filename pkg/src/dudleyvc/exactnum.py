"""Exact rational linear algebra and an approximate sign oracle.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator, zero is ``0/1``).  Matrices are plain sequences of rows.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Sequence

Rational = Fraction
Matrix = Sequence[Sequence]


class DimensionError(ValueError):
    pass


class InvalidInputError(ValueError):
    pass


class SignClass(enum.Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value) -> "SignClass":
        return cls((value > 0) - (value < 0))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a decimal such as ``"0.25"`` exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"not a rational number: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _shape(m: Matrix) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise DimensionError("ragged matrix")
    return rows, cols


def integer_rows(m: Matrix) -> tuple[list[list[int]], int]:
    """Scale each row by the lcm of its denominators.

    Returns the integer matrix and the product of the positive scale
    factors, so ``det(m) == det(result) / scale``.
    """
    out = []
    scale = 1
    for row in m:
        row = [Fraction(v) for v in row]
        lcm = 1
        for v in row:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        out.append([v.numerator * (lcm // v.denominator) for v in row])
        scale *= lcm
    return out, scale


def bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix (copied)."""
    n = len(a)
    if n == 0:
        return 1
    a = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def bareiss_rank(a: list[list[int]]) -> int:
    a = [list(r) for r in a]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        pivot_row = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        pivot = a[rank][c]
        for i in range(rank + 1, rows):
            f = a[i][c]
            row_i = a[i]
            row_r = a[rank]
            for j in range(c + 1, cols):
                row_i[j] = (pivot * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        rank += 1
    return rank


def det_exact(m: Matrix) -> Fraction:
    """Exact determinant of a square rational matrix."""
    rows, cols = _shape(m)
    if rows != cols:
        raise DimensionError(f"determinant of non-square {rows}x{cols} matrix")
    ints, scale = integer_rows(m)
    return Fraction(bareiss_det(ints), scale)


def rank(m: Matrix) -> int:
    """Exact row rank of a rational matrix."""
    rows, _ = _shape(m)
    if rows == 0:
        return 0
    ints, _ = integer_rows(m)
    return bareiss_rank(ints)


def det_float(m: Matrix) -> float:
    """Determinant by Gaussian elimination with partial pivoting."""
    a = [[float(v) for v in row] for row in m]
    n = len(a)
    det = 1.0
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0.0:
            return 0.0
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return det


def det_sign_approx(m: Matrix, epsilon: float = 1e-9) -> SignClass:
    """Sign of a float determinant, ZERO when below a row-norm scaled threshold.

    The threshold is ``epsilon * max(1, prod(||row_i||))``; the product of
    row norms bounds ``|det|`` (Hadamard), which keeps the cut relative.
    """
    rows, cols = _shape(m)
    if rows != cols:
        raise DimensionError(f"determinant of non-square {rows}x{cols} matrix")
    if not epsilon > 0:
        raise InvalidInputError("epsilon must be positive")
    floats = [[float(v) for v in row] for row in m]
    if any(not math.isfinite(v) for row in floats for v in row):
        raise InvalidInputError("matrix has NaN or infinite entries")
    scale = 1.0
    for row in floats:
        scale *= math.sqrt(sum(v * v for v in row))
    det = det_float(floats)
    if abs(det) <= epsilon * max(1.0, scale):
        return SignClass.ZERO
    return SignClass.of(det)
