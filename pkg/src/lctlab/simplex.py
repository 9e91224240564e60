"""Two-phase simplex over exact rationals with Bland's anti-cycling rule.

Solves ``min c.x  s.t.  A x = b, x >= 0``. Problems here are tiny, so a dense
tableau of Fractions is fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class InfeasibleError(ValueError):
    pass


class UnboundedError(ValueError):
    pass


@dataclass(frozen=True)
class LpSolution:
    x: tuple
    value: Fraction
    basis: tuple
    pivots: int


def _pivot(T: list[list[Fraction]], basis: list[int], row: int, col: int):
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    prow = T[row]
    for r, line in enumerate(T):
        if r != row:
            f = line[col]
            if f:
                T[r] = [a - f * b for a, b in zip(line, prow)]
    basis[row] = col


def _run(T, basis, allowed: int) -> int:
    """Optimise the tableau whose last row holds reduced costs; columns
    ``>= allowed`` (other than the rhs) may not enter."""
    pivots = 0
    m = len(T) - 1
    while True:
        cost = T[-1]
        col = next((j for j in range(allowed) if cost[j] < 0), None)
        if col is None:
            return pivots
        best = None
        for r in range(m):
            a = T[r][col]
            if a > 0:
                ratio = T[r][-1] / a
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            raise UnboundedError("objective is unbounded below")
        _pivot(T, basis, best[1], col)
        pivots += 1


def solve(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LpSolution:
    c = [Fraction(v) for v in c]
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    m, n = len(A), len(c)
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]

    # phase 1: artificials n..n+m-1
    T = [A[i] + [Fraction(int(k == i)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = list(range(n, n + m))
    phase1 = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for i in range(m):
        phase1 = [p - t for p, t in zip(phase1, T[i])]
    T.append(phase1)
    pivots = _run(T, basis, n + m)
    if T[-1][-1] != 0:
        raise InfeasibleError("constraints have no nonnegative solution")

    # drive remaining artificials out of the basis, dropping redundant rows
    r = 0
    while r < len(T) - 1:
        if basis[r] >= n:
            col = next((j for j in range(n) if T[r][j] != 0), None)
            if col is None:
                del T[r]
                del basis[r]
                continue
            _pivot(T, basis, r, col)
            pivots += 1
        r += 1

    T = [row[:n] + [row[-1]] for row in T[:-1]]
    obj = c + [Fraction(0)]
    for i, j in enumerate(basis):
        if obj[j]:
            f = obj[j]
            obj = [o - f * t for o, t in zip(obj, T[i])]
    T.append(obj)
    pivots += _run(T, basis, n)

    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LpSolution(tuple(x), value, tuple(basis), pivots)
