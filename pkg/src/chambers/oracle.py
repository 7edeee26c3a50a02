"""Brute-force region counting by sign-vector enumeration.

Independent of the poset/Zaslavsky pipeline: a region of the central lift
is a feasible strict sign vector (sigma_i u_i . x > 0 for all i), decided by
exact rational linear feasibility with the strict inequalities rescaled to
">= 1".  Projective regions are antipodal pairs of central ones.

Enumeration is a depth-first walk over sign prefixes with infeasible
prefixes pruned; each node carries an exact witness point, and a child only
pays for a linear program when the parent's witness lands on the wrong side
of the next hyperplane.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactlin import Vec, dot
from .feasibility import feasible_point
from .projective import ProjArrangement, ensure_valid

ENUMERATION_GUARD = 24


class TooLargeError(ValueError):
    """Sign-vector enumeration is guarded to n <= 24 hyperplanes."""


def sign_vector_feasible(arr: ProjArrangement, signs: Sequence[int]) -> bool:
    """True iff some x in Q^(d+1) has sign_i * (u_i . x) >= 1 for all i."""
    if arr.n > ENUMERATION_GUARD:
        raise TooLargeError(f"n = {arr.n} exceeds the enumeration guard")
    if len(signs) != arr.n:
        raise ValueError("sign vector length must match the arrangement")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    rows = [tuple(s * x for x in u) for s, u in zip(signs, arr.covectors)]
    return feasible_point(rows, arr.d + 1) is not None


def count_regions_oracle(arr: ProjArrangement) -> int:
    """Region count as (number of feasible sign vectors) / 2.

    Feasible vectors come in antipodal pairs, so only the branch with
    sigma_1 = +1 is walked and its leaf count is the projective answer.
    """
    ensure_valid(arr)
    if arr.n > ENUMERATION_GUARD:
        raise TooLargeError(f"n = {arr.n} exceeds the enumeration guard")
    covs = arr.covectors
    dim = arr.d + 1
    first = covs[0]
    witness = feasible_point([first], dim)
    assert witness is not None
    total = 0
    stack = [(1, (first,), witness)]
    while stack:
        depth, rows, x = stack.pop()
        if depth == len(covs):
            total += 1
            continue
        u = covs[depth]
        val = dot(u, x)
        for sign in (1, -1):
            row = u if sign == 1 else tuple(-a for a in u)
            v = val if sign == 1 else -val
            if v >= 1:
                child = x
            elif v > 0:
                child = tuple(xi / v for xi in x)
            else:
                child = feasible_point(rows + (row,), dim)
                if child is None:
                    continue
            stack.append((depth + 1, rows + (row,), child))
    return total
