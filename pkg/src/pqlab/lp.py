"""Dense two-phase simplex over ``Fraction`` with Bland's rule.

Small and slow on purpose: every pivot is exact, and Bland's rule makes
cycling impossible, so the returned optimum is the true rational optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

LE, GE, EQ = "<=", ">=", "=="


@dataclass(frozen=True)
class LPSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    x: tuple[Fraction, ...]
    pivots: int


def _pivot(T, obj, basis, r, c):
    row = T[r]
    inv = 1 / row[c]
    if inv != 1:
        T[r] = row = [v * inv for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b for a, b in zip(other, row)]
    f = obj[c]
    if f:
        obj[:] = [a - f * b for a, b in zip(obj, row)]
    basis[r] = c


def _run(T, obj, basis, allowed, counter):
    # Minimizes; obj holds reduced costs and obj[-1] = -(current value).
    ncols = len(obj) - 1
    while True:
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return "optimal"
        leave = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if leave is None or ratio < leave[0] or (ratio == leave[0] and basis[i] < basis[leave[1]]):
                    leave = (ratio, i)
        if leave is None:
            return "unbounded"
        _pivot(T, obj, basis, leave[1], enter)
        counter[0] += 1


def solve_lp(
    c: Sequence,
    A: Sequence[Sequence],
    senses: Sequence[str],
    b: Sequence,
    maximize: bool = False,
) -> LPSolution:
    """Optimize ``c.x`` subject to ``A x (senses) b`` and ``x >= 0``."""
    n = len(c)
    m = len(A)
    cost = [Fraction(v) for v in c]
    if maximize:
        cost = [-v for v in cost]
    rows, rhs, sense = [], [], []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        if len(row) != n:
            raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        bi = Fraction(b[i])
        s = senses[i]
        if s not in (LE, GE, EQ):
            raise ValueError(f"unknown constraint sense {s!r}")
        if bi < 0:
            row, bi = [-v for v in row], -bi
            s = {LE: GE, GE: LE, EQ: EQ}[s]
        rows.append(row)
        rhs.append(bi)
        sense.append(s)

    n_slack = sum(1 for s in sense if s != EQ)
    n_art = sum(1 for s in sense if s != LE)
    ncols = n + n_slack + n_art
    T, basis = [], []
    slack_at, art_at = n, n + n_slack
    artificial = set()
    for i in range(m):
        row = rows[i] + [Fraction(0)] * (n_slack + n_art) + [rhs[i]]
        if sense[i] == LE:
            row[slack_at] = Fraction(1)
            basis.append(slack_at)
            slack_at += 1
        else:
            if sense[i] == GE:
                row[slack_at] = Fraction(-1)
                slack_at += 1
            row[art_at] = Fraction(1)
            basis.append(art_at)
            artificial.add(art_at)
            art_at += 1
        T.append(row)

    counter = [0]
    if artificial:
        obj = [Fraction(0)] * (ncols + 1)
        for i in range(m):
            if basis[i] in artificial:
                for j in range(ncols + 1):
                    if j not in artificial:
                        obj[j] -= T[i][j]
        _run(T, obj, basis, [True] * ncols, counter)
        if -obj[-1] != 0:
            return LPSolution("infeasible", None, (), counter[0])
        # drive zero-valued artificials out of the basis; drop redundant rows
        keep = []
        for i in range(len(T)):
            if basis[i] in artificial:
                j = next((j for j in range(ncols) if j not in artificial and T[i][j] != 0), None)
                if j is None:
                    continue
                _pivot(T, obj, basis, i, j)
            keep.append(i)
        T = [T[i] for i in keep]
        basis = [basis[i] for i in keep]

    obj = [Fraction(0)] * (ncols + 1)
    for j in range(n):
        obj[j] = cost[j]
    for i, bv in enumerate(basis):
        cb = cost[bv] if bv < n else Fraction(0)
        if cb:
            obj = [a - cb * t for a, t in zip(obj, T[i])]
    allowed = [j not in artificial for j in range(ncols)]
    status = _run(T, obj, basis, allowed, counter)
    if status == "unbounded":
        return LPSolution("unbounded", None, (), counter[0])
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = T[i][-1]
    value = sum((cost[j] * x[j] for j in range(n)), Fraction(0))
    if maximize:
        value = -value
    return LPSolution("optimal", value, tuple(x), counter[0])
