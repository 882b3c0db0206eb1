"""Floyd's two general-position conditions, checked by exhaustive minors.

Condition 1: every n-row minor of the ``f1..fn`` columns is nonzero.
Condition 2: every (n+1)-row minor of the ``f1..fn, f0`` columns is nonzero,
the finite stand-in for "f0 - f has at most n zeros on the sample".
Subset indices are 0-based and sorted; witnesses are the lexicographically
least failing subset.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .basis import FunctionBasis, eval_row
from .exactnum import InvalidInputError, SignClass, bareiss_det, det_sign_approx, integer_rows


class Mode(enum.Enum):
    EXACT = "Exact"
    APPROXIMATE = "Approximate"


class Quality(enum.Enum):
    CERTIFIED = "Certified"
    APPROXIMATE_ONLY = "ApproximateOnly"


class InsufficientSampleError(ValueError):
    pass


@dataclass(frozen=True)
class DesignMatrix:
    """Rows ``(f1(x_i), ..., fn(x_i), f0(x_i))`` for each sample point."""

    rows: tuple
    n: int
    mode: Mode
    points: tuple
    int_rows: tuple | None = field(default=None, repr=False, compare=False)

    @property
    def N(self) -> int:
        return len(self.rows)

    def minor_is_zero(self, subset: Sequence[int], cols: int, epsilon: float) -> bool:
        if self.mode is Mode.EXACT:
            return bareiss_det([self.int_rows[i][:cols] for i in subset]) == 0
        m = [self.rows[i][:cols] for i in subset]
        return det_sign_approx(m, epsilon) is SignClass.ZERO


def _is_rational(c) -> bool:
    return isinstance(c, (int, Fraction))


def build_design_matrix(basis: FunctionBasis, points: Sequence[Sequence]) -> DesignMatrix:
    if len(points) == 0:
        raise InvalidInputError("empty sample")
    for p in points:
        if len(p) != basis.k:
            raise InvalidInputError(
                f"point {tuple(p)} has dimension {len(p)}, basis expects {basis.k}"
            )
    exact = basis.is_exact and all(_is_rational(c) for p in points for c in p)
    rows = tuple(eval_row(basis, p, exact=exact) for p in points)
    if exact:
        # positive per-row scaling leaves every minor's zero-ness unchanged
        ints, _ = integer_rows(rows)
        return DesignMatrix(rows, basis.n, Mode.EXACT, tuple(map(tuple, points)), tuple(map(tuple, ints)))
    return DesignMatrix(rows, basis.n, Mode.APPROXIMATE, tuple(map(tuple, points)))


@dataclass(frozen=True)
class ConditionResult:
    condition: int
    holds: bool
    failing_subset: tuple | None
    checked_count: int
    quality: Quality
    failing_subsets: tuple = ()

    def describe(self) -> str:
        if self.holds:
            return "holds"
        return "fails at " + "(" + ",".join(str(i) for i in self.failing_subset) + ")"


def _check(dm: DesignMatrix, size: int, cols: int, condition: int, exhaustive: bool, epsilon: float):
    if dm.N < size:
        raise InsufficientSampleError(
            f"condition {condition} needs at least {size} points, got {dm.N}"
        )
    failures = []
    checked = 0
    for subset in itertools.combinations(range(dm.N), size):
        checked += 1
        if dm.minor_is_zero(subset, cols, epsilon):
            failures.append(subset)
            if not exhaustive:
                break
    quality = Quality.CERTIFIED if dm.mode is Mode.EXACT else Quality.APPROXIMATE_ONLY
    return ConditionResult(
        condition=condition,
        holds=not failures,
        failing_subset=failures[0] if failures else None,
        checked_count=checked,
        quality=quality,
        failing_subsets=tuple(failures) if exhaustive else tuple(failures[:1]),
    )


def check_condition1(dm: DesignMatrix, exhaustive: bool = False, epsilon: float = 1e-9) -> ConditionResult:
    """Every n-subset of the sample gives a nonsingular ``f1..fn`` minor."""
    return _check(dm, dm.n, dm.n, 1, exhaustive, epsilon)


def check_condition2(dm: DesignMatrix, exhaustive: bool = False, epsilon: float = 1e-9) -> ConditionResult:
    """Every (n+1)-subset gives a nonsingular ``f1..fn, f0`` minor."""
    return _check(dm, dm.n + 1, dm.n + 1, 2, exhaustive, epsilon)


def verify_general_position(basis: FunctionBasis, points, exhaustive=False, epsilon=1e-9):
    dm = build_design_matrix(basis, points)
    if dm.N < dm.n + 1:
        raise InsufficientSampleError(f"need at least n+1 = {dm.n + 1} points, got {dm.N}")
    return check_condition1(dm, exhaustive, epsilon), check_condition2(dm, exhaustive, epsilon)


def is_certified(c1: ConditionResult, c2: ConditionResult) -> bool:
    return c1.holds and c2.holds and c1.quality is Quality.CERTIFIED and c2.quality is Quality.CERTIFIED


def expected_counts(N: int, n: int) -> tuple[int, int]:
    return comb(N, n), comb(N, n + 1)
