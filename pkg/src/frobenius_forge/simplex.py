"""Exact rational linear programming.

A dense two-phase tableau simplex over :class:`fractions.Fraction` with
Bland's anti-cycling rule.  Problem sizes here are a handful of variables, so
clarity beats speed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

__all__ = ["LPResult", "maximize"]


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: Optional[tuple] = None
    value: Optional[Fraction] = None


def _pivot(T, basis, row, col):
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for i, r in enumerate(T):
        if i != row and r[col] != 0:
            f = r[col]
            T[i] = [a - f * b for a, b in zip(r, T[row])]
    basis[row] = col


def _run(T, basis, obj, allowed):
    """Maximize ``obj . x`` on tableau ``T`` in place; False if unbounded."""
    rhs = len(T[0]) - 1
    while True:
        enter = None
        for j in allowed:
            if j in basis:
                continue
            red = obj[j] - sum(obj[basis[i]] * T[i][j] for i in range(len(T)))
            if red > 0:
                enter = j
                break
        if enter is None:
            return True
        best = None
        for i, r in enumerate(T):
            if r[enter] > 0:
                ratio = r[rhs] / r[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], enter)


def maximize(c: Sequence, A_ub=(), b_ub=(), A_eq=(), b_eq=()) -> LPResult:
    """Maximize ``c . x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``.

    All data are converted to ``Fraction``; the optimum returned is exact.
    """
    n = len(c)
    rows = [([Fraction(v) for v in a], Fraction(b), True) for a, b in zip(A_ub, b_ub)]
    rows += [([Fraction(v) for v in a], Fraction(b), False) for a, b in zip(A_eq, b_eq)]
    m = len(rows)
    n_slack = sum(1 for r in rows if r[2])
    n_cols = n + n_slack + m  # structural, slack, artificial
    T = []
    s = 0
    for i, (a, b, is_ub) in enumerate(rows):
        line = a + [Fraction(0)] * (n_slack + m) + [b]
        if is_ub:
            line[n + s] = Fraction(1)
            s += 1
        if b < 0:
            line = [-v for v in line]
        line[n + n_slack + i] = Fraction(1)
        T.append(line)
    basis = [n + n_slack + i for i in range(m)]

    phase1 = [Fraction(0)] * (n + n_slack) + [Fraction(-1)] * m
    _run(T, basis, phase1, range(n_cols))
    if any(T[i][-1] != 0 for i in range(m) if basis[i] >= n + n_slack):
        return LPResult("infeasible")

    # drive remaining (zero-level) artificials out of the basis, dropping redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= n + n_slack:
            col = next((j for j in range(n + n_slack) if T[i][j] != 0 and j not in basis), None)
            if col is None:
                continue
            _pivot(T, basis, i, col)
        keep.append(i)
    T = [T[i] for i in keep]
    basis = [basis[i] for i in keep]

    obj = [Fraction(v) for v in c] + [Fraction(0)] * (n_slack + m)
    if not _run(T, basis, obj, range(n + n_slack)):
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = T[i][-1]
    return LPResult("optimal", tuple(x), sum(ci * xi for ci, xi in zip(obj, x)))
