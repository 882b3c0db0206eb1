"""Open cells of the dual hyperplane arrangement in parameter space.

Sample point ``x_i`` lies in ``pos(f0 - sum a_j f_j)`` iff ``<w_i, a> < b_i``
with ``w_i = (f1(x_i), ..., fn(x_i))`` and ``b_i = f0(x_i)``.  Each open cell
of the arrangement therefore realizes one member of the restricted class.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .floyd import DesignMatrix, Mode
from .lp import FEASIBLE, INDETERMINATE, strict_feasible
from .setsystem import SetSystem

BRUTE_FORCE_CAP = 15
MAX_DIMENSION = 8


class CapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class DualHyperplane:
    normal: tuple
    offset: object
    source_index: int

    @property
    def degenerate(self) -> bool:
        """Zero normal and zero offset: no parameter puts the point on either side."""
        return self.offset == 0 and all(v == 0 for v in self.normal)

    def side(self, a) -> object:
        """``<w, a> - b``: negative inside the positivity set."""
        return sum(w * x for w, x in zip(self.normal, a)) - self.offset


@dataclass(frozen=True)
class Cell:
    signs: tuple  # one of '+', '-' per hyperplane, '0' for degenerate ones
    witness: tuple

    @property
    def member(self) -> int:
        out = 0
        for s in self.signs:
            out = (out << 1) | (s == "+")
        return out


@dataclass(frozen=True)
class Enumeration:
    cells: tuple
    ground_size: int
    certified: bool
    degenerate: tuple = ()
    indeterminate: int = 0
    lp_count: int = field(default=0, compare=False)

    @property
    def set_system(self) -> SetSystem:
        return SetSystem(self.ground_size, (c.member for c in self.cells))


def dualize(dm: DesignMatrix) -> list[DualHyperplane]:
    return [DualHyperplane(tuple(row[:-1]), row[-1], i) for i, row in enumerate(dm.rows)]


def _constraints(hs, signs):
    return [(h.normal, h.offset, s) for h, s in zip(hs, signs) if s != "0"]


def _check_dimension(hs):
    if not hs:
        raise ValueError("need at least one hyperplane")
    n = len(hs[0].normal)
    if any(len(h.normal) != n for h in hs):
        raise ValueError("hyperplanes of mixed dimension")
    if n > MAX_DIMENSION:
        raise ValueError(f"parameter dimension {n} exceeds the supported {MAX_DIMENSION}")
    return n


def enumerate_arrangement(hs: Sequence[DualHyperplane], exact: bool = True, tol: float = 1e-9) -> Enumeration:
    """Insert hyperplanes one at a time, splitting cells the new one crosses.

    A cell's stored witness already certifies the side it lies on, so only
    the opposite side needs an LP; a witness on the hyperplane needs both.
    """
    n = _check_dimension(hs)
    zero = Fraction(0) if exact else 0.0
    cells = [((), tuple([zero] * n))]
    lp_count = 0
    indeterminate = 0
    for h in hs:
        if h.degenerate:
            cells = [(signs + ("0",), a) for signs, a in cells]
            continue
        scale = max([abs(float(v)) for v in h.normal] + [abs(float(h.offset)), 1.0])
        out = []
        for signs, a in cells:
            v = h.side(a)
            if exact:
                on_plus, on_minus = v < 0, v > 0
            else:
                on_plus, on_minus = v < -tol * scale, v > tol * scale
            base = _constraints(hs, signs)
            for s, known in (("+", on_plus), ("-", on_minus)):
                if known:
                    out.append((signs + (s,), a))
                    continue
                lp_count += 1
                res = strict_feasible(base + [(h.normal, h.offset, s)], exact=exact, tol=tol)
                if res.status == FEASIBLE:
                    out.append((signs + (s,), res.witness))
                elif res.status == INDETERMINATE:
                    indeterminate += 1
        cells = out
    cells = sorted((Cell(signs, a) for signs, a in cells), key=lambda c: c.member)
    return Enumeration(
        cells=tuple(cells),
        ground_size=len(hs),
        certified=exact and indeterminate == 0,
        degenerate=tuple(h.source_index for h in hs if h.degenerate),
        indeterminate=indeterminate,
        lp_count=lp_count,
    )


def enumerate_cells(hs: Sequence[DualHyperplane], exact: bool = True, tol: float = 1e-9) -> SetSystem:
    return enumerate_arrangement(hs, exact, tol).set_system


def brute_force_arrangement(hs: Sequence[DualHyperplane], cap: int = BRUTE_FORCE_CAP, exact: bool = True, tol: float = 1e-9) -> Enumeration:
    """Test all ``2**N`` sign vectors independently; the cross-check oracle."""
    n = _check_dimension(hs)
    if len(hs) > cap:
        raise CapExceededError(f"brute force over 2^{len(hs)} sign vectors refused (cap {cap})")
    live = [h for h in hs if not h.degenerate]
    cells = []
    indeterminate = 0
    for choice in itertools.product("+-", repeat=len(live)):
        it = iter(choice)
        signs = tuple("0" if h.degenerate else next(it) for h in hs)
        if not live:
            cells.append(Cell(signs, tuple([Fraction(0) if exact else 0.0] * n)))
            continue
        res = strict_feasible(_constraints(hs, signs), exact=exact, tol=tol)
        if res.status == FEASIBLE:
            cells.append(Cell(signs, res.witness))
        elif res.status == INDETERMINATE:
            indeterminate += 1
    cells.sort(key=lambda c: c.member)
    return Enumeration(
        cells=tuple(cells),
        ground_size=len(hs),
        certified=exact and indeterminate == 0,
        degenerate=tuple(h.source_index for h in hs if h.degenerate),
        indeterminate=indeterminate,
        lp_count=2 ** len(live),
    )


def brute_force_cells(hs: Sequence[DualHyperplane], cap: int = BRUTE_FORCE_CAP, exact: bool = True, tol: float = 1e-9) -> SetSystem:
    return brute_force_arrangement(hs, cap, exact, tol).set_system


def witness_is_valid(hs: Sequence[DualHyperplane], cell: Cell) -> bool:
    """Re-substitute the witness into every strict inequality of its cell."""
    for h, s in zip(hs, cell.signs):
        if s == "0":
            continue
        v = h.side(cell.witness)
        if (s == "+" and not v < 0) or (s == "-" and not v > 0):
            return False
    return True


def is_exact(dm: DesignMatrix) -> bool:
    return dm.mode is Mode.EXACT
