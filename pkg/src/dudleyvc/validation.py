"""Input checks shared by the estimator and the CLI."""
from __future__ import annotations

import math
import numbers
from fractions import Fraction

from .basis import FunctionBasis, builtin_basis, parse_basis_file
from .exactnum import InvalidInputError, parse_rational


def _coerce(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Real):
        f = float(value)
        if not math.isfinite(f):
            raise InvalidInputError(f"non-finite coordinate {value!r}")
        # binary floats are exact dyadic rationals
        return Fraction(f)
    raise InvalidInputError(f"cannot interpret {value!r} as a coordinate")


def check_points(X, k: int | None = None, min_samples: int = 1) -> tuple:
    """Return ``X`` as a tuple of rational tuples, all of dimension ``k``.

    Accepts nested sequences or numpy arrays of ints, floats, Fractions or
    rational strings; a 1-d input is read as ``N`` points with ``k == 1``.
    """
    rows = list(X)
    if len(rows) < min_samples:
        raise InvalidInputError(f"expected at least {min_samples} points, got {len(rows)}")
    points = []
    for row in rows:
        if isinstance(row, (str, numbers.Number)):
            row = (row,)
        points.append(tuple(_coerce(c) for c in row))
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise InvalidInputError(f"points of mixed dimension {sorted(dims)}")
    if k is not None and dims and dims != {k}:
        raise InvalidInputError(f"points have dimension {dims.pop()}, expected {k}")
    return tuple(points)


def resolve_basis(basis=None, family: str | None = None, params: dict | None = None) -> FunctionBasis:
    """A FunctionBasis from an instance, basis-file text, or a family name."""
    if isinstance(basis, FunctionBasis):
        return basis
    if isinstance(basis, str):
        return parse_basis_file(basis)
    if basis is not None:
        raise InvalidInputError(f"unsupported basis {basis!r}")
    if family is None:
        raise InvalidInputError("give a basis or a family name")
    return builtin_basis(family, **(params or {}))
