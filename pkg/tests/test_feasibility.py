import itertools
import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from chambers.feasibility import feasible_point


def fourier_motzkin_feasible(rows):
    """Independent oracle: eliminate variables from {r . x > 0} directly.

    Equivalent to the r . x >= 1 form decided by feasible_point because the
    solution set is a scaled open cone.  Rows must be nonzero.
    """
    rows = [tuple(Fraction(a) for a in r) for r in rows]
    while rows and len(rows[0]) > 1:
        pos = [r for r in rows if r[0] > 0]
        neg = [r for r in rows if r[0] < 0]
        new_rows = [r[1:] for r in rows if r[0] == 0]
        for p, q in itertools.product(pos, neg):
            comb = tuple(p[0] * qj - q[0] * pj for pj, qj in zip(p[1:], q[1:]))
            if not any(comb):
                return False
            new_rows.append(comb)
        rows = new_rows
    if not rows:
        return True
    return all(r[0] > 0 for r in rows) or all(r[0] < 0 for r in rows)


def decide(rows, dim):
    x = feasible_point(rows, dim)
    if x is not None:
        for r in rows:
            assert sum(Fraction(a) * b for a, b in zip(r, x)) >= 1
    return x is not None


class TestKnownSystems:
    def test_orthant(self):
        assert decide([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)

    def test_opposite_pair_infeasible(self):
        assert not decide([(1, 1), (-1, -1)], 2)

    def test_near_opposite_feasible(self):
        assert decide([(1, 0), (-1, 1)], 2)

    def test_surrounding_sectors_infeasible(self):
        assert not decide([(1, 0), (-1, 2), (-1, -2)], 2)

    def test_empty_system(self):
        assert feasible_point([], 3) == (0, 0, 0)

    def test_fraction_rows(self):
        assert decide([(Fraction(1, 2), Fraction(-1, 3)), (0, 1)], 2)

    def test_degenerate_equality_like(self):
        # x >= 1 and -x >= 1 squeezed through a shared hyperplane
        assert not decide([(1, 0), (-1, 0)], 2)
        assert not decide([(1, 0), (-1, 0), (0, 1)], 2)


nonzero_row = (lambda n: st.lists(st.integers(-3, 3), min_size=n, max_size=n)
               .map(tuple).filter(lambda r: any(r)))


class TestAgainstFourierMotzkin:
    @given(st.lists(nonzero_row(2), min_size=1, max_size=6))
    @settings(deadline=None, max_examples=150)
    def test_dim2(self, rows):
        assert decide(rows, 2) == fourier_motzkin_feasible(rows)

    @given(st.lists(nonzero_row(3), min_size=1, max_size=5))
    @settings(deadline=None, max_examples=150)
    def test_dim3(self, rows):
        assert decide(rows, 3) == fourier_motzkin_feasible(rows)


def test_randomized_dim4_witnesses_verify():
    rng = random.Random(7)
    for _ in range(60):
        k = rng.randint(1, 9)
        rows = [tuple(rng.randint(-3, 3) for _ in range(4)) for _ in range(k)]
        rows = [r for r in rows if any(r)]
        if rows:
            decide(rows, 4)
