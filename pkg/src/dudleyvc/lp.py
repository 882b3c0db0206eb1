"""Strict feasibility of sign conditions ``<w, a> < b`` / ``<w, a> > b``.

The open polyhedron is nonempty iff ``max t`` subject to every signed slack
being ``>= t`` and ``t <= 1`` is positive.  The exact solver is a
fraction-free tableau simplex on integers (every entry is a minor of the
input, so divisions are exact) with Bland's rule against cycling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class LPResult:
    status: str
    witness: tuple | None = None
    margin: object = None

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def _sign(s) -> int:
    if s in (1, "+"):
        return 1
    if s in (-1, "-"):
        return -1
    raise ValueError(f"required sign must be '+' or '-', got {s!r}")


def _int_row(values) -> list[int]:
    values = [Fraction(v) for v in values]
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [v.numerator * (lcm // v.denominator) for v in values]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


def strict_feasible(constraints: Sequence, exact: bool = True, tol: float = 1e-9) -> LPResult:
    """Find ``a`` with ``<w, a> < b`` for sign '+' and ``<w, a> > b`` for sign '-'.

    ``constraints`` is a sequence of ``(w, b, sign)``.  An empty sequence is
    trivially feasible only if the dimension is known, so at least one
    constraint is required.
    """
    if not constraints:
        raise ValueError("at least one constraint is required")
    if exact:
        return _solve_exact(constraints)
    return _solve_float(constraints, tol)


def _solve_exact(constraints) -> LPResult:
    n = len(constraints[0][0])
    # Rows: <g, a> + lam * t <= h with g = s*w, h = s*b scaled to integers.
    rows = []
    for w, b, s in constraints:
        s = _sign(s)
        r = _int_row([s * Fraction(v) for v in w] + [Fraction(1), s * Fraction(b)])
        # r[n] is the positive scale carried by t
        rows.append(r)
    rows.append([0] * n + [1, 1])  # t <= 1

    # Shift t = t0 + tau with integer t0 so every right-hand side is >= 0.
    t0 = min(math.floor(Fraction(r[n + 1], r[n])) for r in rows)
    m = len(rows)
    # columns: p (n), q (n), tau+, tau-, slacks (m), rhs
    width = 2 * n + 2 + m + 1
    rhs = width - 1
    tab = []
    for i, r in enumerate(rows):
        g = r[:n]
        lam = r[n]
        line = g + [-v for v in g] + [lam, -lam] + [0] * m + [r[n + 1] - lam * t0]
        line[2 * n + 2 + i] = 1
        tab.append(line)
    obj = [0] * width
    obj[2 * n] = -1  # maximize tau+ - tau-
    obj[2 * n + 1] = 1
    tab.append(obj)
    basis = [2 * n + 2 + i for i in range(m)]
    denom = 1

    while True:
        z = tab[m]
        col = next((j for j in range(rhs) if z[j] < 0), None)
        if col is None:
            break
        best = None
        for i in range(m):
            a = tab[i][col]
            if a > 0:
                # compare rhs_i / a against the incumbent by cross-multiplying
                if best is None:
                    best = i
                    continue
                lhs = tab[i][rhs] * tab[best][col]
                cur = tab[best][rhs] * a
                if lhs < cur or (lhs == cur and basis[i] < basis[best]):
                    best = i
        if best is None:
            raise RuntimeError("strict-feasibility LP unbounded; t <= 1 should prevent this")
        pivot = tab[best][col]
        prow = tab[best]
        for i in range(m + 1):
            if i == best:
                continue
            row = tab[i]
            f = row[col]
            if f == 0:
                if pivot != denom:
                    for j in range(width):
                        if row[j]:
                            row[j] = row[j] * pivot // denom
                continue
            for j in range(width):
                row[j] = (row[j] * pivot - f * prow[j]) // denom
        denom = pivot
        basis[best] = col

    values = [Fraction(0)] * (2 * n + 2)
    for i, var in enumerate(basis):
        if var < 2 * n + 2:
            values[var] = Fraction(tab[i][rhs], denom)
    a = tuple(values[j] - values[n + j] for j in range(n))
    t = t0 + values[2 * n] - values[2 * n + 1]
    if t > 0:
        return LPResult(FEASIBLE, a, t)
    return LPResult(INFEASIBLE, None, t)


def _solve_float(constraints, tol) -> LPResult:
    import numpy as np
    from scipy.optimize import linprog

    n = len(constraints[0][0])
    A = []
    h = []
    for w, b, s in constraints:
        s = _sign(s)
        g = np.asarray([float(v) for v in w], dtype=float) * s
        hb = float(b) * s
        scale = max(np.max(np.abs(g)) if n else 0.0, abs(hb))
        if scale == 0.0:
            # 0 < 0 is never satisfiable
            return LPResult(INFEASIBLE, None, 0.0)
        A.append(np.append(g / scale, 1.0))
        h.append(hb / scale)
    c = np.zeros(n + 1)
    c[-1] = -1.0
    bounds = [(None, None)] * n + [(None, 1.0)]
    res = linprog(c, A_ub=np.array(A), b_ub=np.array(h), bounds=bounds, method="highs")
    if res.status != 0:
        return LPResult(INDETERMINATE, None, None)
    t = float(-res.fun)
    if t > tol:
        return LPResult(FEASIBLE, tuple(float(v) for v in res.x[:n]), t)
    if t < -tol:
        return LPResult(INFEASIBLE, None, t)
    return LPResult(INDETERMINATE, None, t)
