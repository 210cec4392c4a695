"""Exact LP feasibility over the rationals.

Phase one of the simplex method on ``A x = b, x >= 0`` with one artificial
variable per row and Bland's rule for both entering and leaving choices,
which rules out cycling. Arithmetic is exact throughout: ``gmpy2.mpq``
inside the tableau, ``fractions.Fraction`` at the interface.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq

Number = int | Fraction


def feasible_point(A: Sequence[Sequence[Number]], b: Sequence[Number]) -> list[Fraction] | None:
    """A nonnegative solution of ``A x = b``, or ``None`` if there is none."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("ragged constraint matrix")

    width = n + m
    zero, one = mpq(0), mpq(1)
    tab: list[list] = []
    for i, (row, bi) in enumerate(zip(A, b)):
        r = [_q(v) for v in row]
        rhs = _q(bi)
        if rhs < 0:
            r = [-v for v in r]
            rhs = -rhs
        art = [zero] * m
        art[i] = one
        tab.append(r + art + [rhs])
    basis = list(range(n, n + m))

    # Reduced costs of "minimize the sum of artificials"; last entry is -objective.
    cost = [zero] * (width + 1)
    for r in tab:
        for j in range(n):
            cost[j] -= r[j]
        cost[width] -= r[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, r in enumerate(tab):
            a = r[enter]
            if a > 0:
                ratio = r[width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # cannot happen: phase one is bounded below by zero
            raise ArithmeticError("unbounded phase-one problem")
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            v = tab[i][width]
            x[j] = Fraction(int(v.numerator), int(v.denominator))
    return x


def _q(v: Number) -> mpq:
    if isinstance(v, Fraction):
        return mpq(v.numerator, v.denominator)
    return mpq(v)


def _pivot(tab: list[list], cost: list, row: int, col: int) -> None:
    piv_row = tab[row]
    p = piv_row[col]
    if p != 1:
        tab[row] = piv_row = [v / p if v else v for v in piv_row]
    support = [k for k, c in enumerate(piv_row) if c]
    for r in tab:
        if r is not piv_row and r[col]:
            f = r[col]
            for k in support:
                r[k] -= f * piv_row[k]
    if cost[col]:
        f = cost[col]
        for k in support:
            cost[k] -= f * piv_row[k]
