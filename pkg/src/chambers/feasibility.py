"""Exact feasibility of homogeneous strict linear systems.

The single primitive here decides, in exact rational arithmetic, whether a
system  r . x >= 1  (one row r per constraint, x free) has a solution, and
produces a rational witness when it does.  Because the constraint set is a
scaled open cone, this is equivalent to deciding  r . x > 0  for all rows.

By Gordan's theorem exactly one of the following holds:

  (a)  some x satisfies  r . x > 0  for every row r,
  (b)  some convex combination of the rows is the zero vector.

We run phase-one simplex on system (b).  If its optimum is zero, (b) holds
and the input is infeasible.  Otherwise the dual solution of the phase-one
program separates the rows from the origin and -pi (suitably scaled) is an
exact witness for (a).

The tableau is kept as an integer matrix with a shared denominator and
updated by fraction-free (integer) pivoting, with Bland's rule, so runs are
exact, terminating, and fast enough to be called tens of thousands of times
by the enumeration oracles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactlin import Scalar, integerize


def feasible_point(rows: Sequence[Sequence[Scalar]], dim: int) -> tuple[Fraction, ...] | None:
    """Exact x with r . x >= 1 for every row, or None when no such x exists."""
    if not rows:
        return (Fraction(0),) * dim
    ints = [integerize(r) for r in rows]
    k = len(ints)
    m = dim + 1  # equations: sum_j lambda_j * B_j = 0  and  sum_j lambda_j = 1

    # columns: k lambdas, m artificials, rhs
    tab = []
    for i in range(dim):
        tab.append([ints[j][i] for j in range(k)]
                   + [1 if t == i else 0 for t in range(m)] + [0])
    tab.append([1] * k + [1 if t == dim else 0 for t in range(m)] + [1])
    # reduced-cost row (z_j - c_j) for the min-sum-of-artificials objective
    obj = [sum(tab[i][j] for i in range(m)) for j in range(k)] + [0] * m + [1]
    basis = list(range(k, k + m))
    den = 1

    while True:
        q = next((j for j in range(k) if obj[j] > 0), None)  # Bland; lambdas only
        if q is None:
            break
        p = None
        for i in range(m):
            piv = tab[i][q]
            if piv <= 0:
                continue
            if p is None:
                p = i
            else:
                lhs = tab[i][-1] * tab[p][q]
                rhs = tab[p][-1] * piv
                if lhs < rhs or (lhs == rhs and basis[i] < basis[p]):
                    p = i
        if p is None:
            raise RuntimeError("phase-one objective unbounded; sign error")
        piv = tab[p][q]
        prow = tab[p]
        for r in range(m):
            if r == p:
                continue
            row = tab[r]
            c = row[q]
            for j in range(k + m + 1):
                num = row[j] * piv - c * prow[j]
                val, rem = divmod(num, den)
                if rem:
                    raise RuntimeError("integer pivot lost exactness")
                row[j] = val
        c = obj[q]
        for j in range(k + m + 1):
            num = obj[j] * piv - c * prow[j]
            val, rem = divmod(num, den)
            if rem:
                raise RuntimeError("integer pivot lost exactness")
            obj[j] = val
        den = piv
        basis[p] = q

    value = Fraction(obj[-1], den)
    if value == 0:
        return None  # Gordan certificate exists: the cone is empty

    # dual of phase one: pi_i = (z - c) on artificial column i, plus its cost 1
    pi = [Fraction(obj[k + i], den) + 1 for i in range(m)]
    margin = pi[dim]
    if margin <= 0:
        raise RuntimeError("inconsistent phase-one dual")
    x = [-pi[i] / margin for i in range(dim)]

    # verify against the original rows and rescale so every product is >= 1
    worst = None
    for r in rows:
        s = sum(Fraction(a) * b for a, b in zip(r, x))
        if s <= 0:
            raise RuntimeError("witness verification failed")
        if worst is None or s < worst:
            worst = s
    if worst < 1:
        x = [xi / worst for xi in x]
    return tuple(x)
