"""Function bases ``(f0; f1..fn)`` and their evaluation at sample points."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import expr as ex
from .exactnum import InvalidInputError, rank


class Exactness(enum.Enum):
    EXACT_POLYNOMIAL = "ExactPolynomial"
    APPROXIMATE_ANALYTIC = "ApproximateAnalytic"


class BasisError(ValueError):
    pass


@dataclass(frozen=True)
class FunctionBasis:
    """A target ``f0`` and members ``f1..fn`` over points of ``R^k``.

    The class is ``pos(f0 - span(f1..fn))``; evaluation rows are ordered
    ``(f1, ..., fn, f0)``.
    """

    k: int
    target: ex.Expr
    members: tuple
    name: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if self.k < 1:
            raise BasisError("ambient dimension k must be at least 1")
        if not self.members:
            raise BasisError("a basis needs at least one member")
        for e in (self.target,) + self.members:
            if ex.max_variable(e) > self.k:
                raise BasisError(f"expression uses a variable beyond k={self.k}")
        if self.target in self.members:
            raise BasisError("target f0 is syntactically one of the members")

    @property
    def n(self) -> int:
        return len(self.members)

    @property
    def exactness(self) -> Exactness:
        if all(ex.is_polynomial(e) for e in (self.target,) + self.members):
            return Exactness.EXACT_POLYNOMIAL
        return Exactness.APPROXIMATE_ANALYTIC

    @property
    def is_exact(self) -> bool:
        return self.exactness is Exactness.EXACT_POLYNOMIAL

    def describe(self) -> str:
        members = ", ".join(ex.to_text(m, self.k) for m in self.members)
        return f"{self.name}: k={self.k} n={self.n} f0={ex.to_text(self.target, self.k)} members=[{members}]"

    @classmethod
    def from_strings(cls, target: str, members: Sequence[str], k: int, name="custom"):
        return cls(
            k,
            ex.parse_expression(target, k),
            tuple(ex.parse_expression(m, k) for m in members),
            name,
        )


def eval_row(basis: FunctionBasis, point: Sequence, exact: bool | None = None) -> tuple:
    """Return ``(f1(p), ..., fn(p), f0(p))``.

    Exact rationals for polynomial bases, floats otherwise; pass
    ``exact=False`` to force floats.
    """
    if len(point) != basis.k:
        raise InvalidInputError(
            f"point has dimension {len(point)}, basis expects {basis.k}"
        )
    if exact is None:
        exact = basis.is_exact
    exprs = basis.members + (basis.target,)
    if exact:
        p = [Fraction(c) for c in point]
        return tuple(ex.evaluate_exact(e, p) for e in exprs)
    return tuple(ex.evaluate_float(e, point) for e in exprs)


def check_linear_independence(basis: FunctionBasis, sample: Sequence[Sequence]) -> bool:
    """Rank test on the ``(f1..fn, f0)`` columns over ``sample``.

    True certifies that ``f0, f1..fn`` are linearly independent; False only
    means this sample does not separate them.
    """
    if len(sample) < basis.n + 1:
        raise InvalidInputError(f"need at least {basis.n + 1} sample points")
    if basis.is_exact:
        rows = [eval_row(basis, p) for p in sample]
        return rank(rows) == basis.n + 1
    import numpy as np

    rows = np.array([eval_row(basis, p) for p in sample], dtype=float)
    return int(np.linalg.matrix_rank(rows)) == basis.n + 1


def _monomial(exponents: Sequence[int]) -> ex.Expr:
    factors = []
    for index, e in enumerate(exponents, start=1):
        if e == 0:
            continue
        factors.append(ex.Var(index) if e == 1 else ex.Pow(ex.Var(index), e))
    if not factors:
        return ex.Const(Fraction(1))
    out = factors[0]
    for f in factors[1:]:
        out = ex.BinOp("*", out, f)
    return out


def monomial_exponents(k: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree <= d, graded, lex-descending within a degree."""
    out = []
    for degree in range(d + 1):
        block = [
            e for e in itertools.product(range(degree, -1, -1), repeat=k)
            if sum(e) == degree
        ]
        out.extend(block)
    return out


def disks(k: int = 2) -> FunctionBasis:
    """Balls in ``R^k``: members ``1, x1..xk``; target ``-(x1^2 + ... + xk^2)``."""
    members = (ex.Const(Fraction(1)),) + tuple(ex.Var(i) for i in range(1, k + 1))
    squares = [ex.Pow(ex.Var(i), 2) for i in range(1, k + 1)]
    target = ex.BinOp("-", ex.Neg(squares[0]), squares[1]) if k >= 2 else ex.Neg(squares[0])
    for s in squares[2:]:
        target = ex.BinOp("-", target, s)
    return FunctionBasis(k, target, members, f"disks_{k}")


def monomials(k: int = 1, d: int = 2, target: str | None = None) -> FunctionBasis:
    """All monomials of total degree <= d.

    Without ``target`` the last monomial of the ordering (``xk^d``) becomes
    f0 and is dropped from the members.
    """
    exps = monomial_exponents(k, d)
    members = [_monomial(e) for e in exps]
    if target is None:
        f0 = members.pop()
    else:
        f0 = ex.parse_expression(target, k)
        members = [m for m in members if m != f0]
    return FunctionBasis(k, f0, tuple(members), f"monomials_k{k}_d{d}")


def poly_threshold(d: int = 2) -> FunctionBasis:
    """Regions above a degree-d curve: members ``1, x, ..., x^d`` over ``(x, y)``; f0 = y."""
    return FunctionBasis(2, ex.Var(2), tuple(_monomial((i, 0)) for i in range(d + 1)), f"poly_threshold_d{d}")


def trig(harmonics: int = 1) -> FunctionBasis:
    """Trigonometric polynomials in x against f0 = y.

    Members: ``1, cos(x), ..., cos(Nx), sin(x), ..., sin(Nx)``.
    """
    def arg(j):
        return ex.Var(1) if j == 1 else ex.BinOp("*", ex.Const(Fraction(j)), ex.Var(1))

    members = [ex.Const(Fraction(1))]
    members += [ex.Call("cos", arg(j)) for j in range(1, harmonics + 1)]
    members += [ex.Call("sin", arg(j)) for j in range(1, harmonics + 1)]
    return FunctionBasis(2, ex.Var(2), tuple(members), f"trig_N{harmonics}")


def halfspaces(k: int = 2) -> FunctionBasis:
    """Affine members with f0 = 2*x1, which lies in their span."""
    members = (ex.Const(Fraction(1)),) + tuple(ex.Var(i) for i in range(1, k + 1))
    target = ex.BinOp("*", ex.Const(Fraction(2)), ex.Var(1))
    return FunctionBasis(k, target, members, f"halfspaces_{k}")


FAMILIES = {
    "disks": (disks, {"k": int}),
    "monomials": (monomials, {"k": int, "d": int, "target": str}),
    "poly_threshold": (poly_threshold, {"d": int}),
    "trig": (trig, {"harmonics": int, "N": int}),
    "halfspaces": (halfspaces, {"k": int}),
}


def builtin_basis(family: str, **params) -> FunctionBasis:
    """Look up a built-in family; ``disks_3`` is shorthand for ``disks`` with k=3."""
    if family.startswith("disks_") and family[6:].isdigit():
        params.setdefault("k", int(family[6:]))
        family = "disks"
    if family not in FAMILIES:
        raise BasisError(f"unknown basis family {family!r}")
    factory, types = FAMILIES[family]
    kwargs = {}
    for key, value in params.items():
        if key not in types:
            raise BasisError(f"family {family!r} takes no parameter {key!r}")
        try:
            kwargs["harmonics" if key == "N" else key] = types[key](value)
        except ValueError as exc:
            raise BasisError(f"bad value for {key}: {value!r}") from exc
    for key in ("k", "d", "harmonics"):
        if key in kwargs and kwargs[key] < (0 if key == "d" else 1):
            raise BasisError(f"invalid parameter {key}={kwargs[key]}")
    return factory(**kwargs)


def parse_basis_file(text: str) -> FunctionBasis:
    """Read the ``dim:`` / ``f0:`` / ``f:`` line format."""
    k = None
    target = None
    members = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise BasisError(f"line {lineno}: expected 'key: value'")
        key = key.strip()
        value = value.strip()
        if key == "dim":
            k = int(value)
        elif key in ("f0", "f"):
            if k is None:
                raise BasisError(f"line {lineno}: 'dim:' must precede expressions")
            e = ex.parse_expression(value, k)
            if key == "f0":
                if target is not None:
                    raise BasisError(f"line {lineno}: duplicate f0")
                target = e
            else:
                members.append(e)
        else:
            raise BasisError(f"line {lineno}: unknown key {key!r}")
    if k is None or target is None:
        raise BasisError("basis file needs 'dim:' and 'f0:' lines")
    return FunctionBasis(k, target, tuple(members), "file")


def format_basis_file(basis: FunctionBasis) -> str:
    lines = [f"dim: {basis.k}", f"f0: {ex.to_text(basis.target, basis.k)}"]
    lines += [f"f: {ex.to_text(m, basis.k)}" for m in basis.members]
    return "\n".join(lines) + "\n"
