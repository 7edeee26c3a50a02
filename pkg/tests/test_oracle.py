import itertools
import random

import pytest

from chambers.oracle import TooLargeError, count_regions_oracle, sign_vector_feasible
from chambers.projective import ProjArrangement, count_regions_projective

TRIANGLE = ProjArrangement(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def moment_curve(n, d):
    return ProjArrangement(d, tuple(
        tuple(t ** k for k in range(d + 1)) for t in range(1, n + 1)))


def near_pencil(n):
    covs = tuple((i, 1, 0) for i in range(n - 1)) + ((0, 0, 1),)
    return ProjArrangement(2, covs)


class TestSignVectorFeasible:
    def test_triangle_all_plus(self):
        assert sign_vector_feasible(TRIANGLE, (1, 1, 1))

    def test_opposite_covectors_infeasible(self):
        relaxed = ProjArrangement(2, ((1, 1, 1), (-1, -1, -1)))
        assert not sign_vector_feasible(relaxed, (1, 1))
        assert sign_vector_feasible(relaxed, (1, -1))

    def test_four_generic_lines_feasible_count(self):
        arr = moment_curve(4, 2)
        count = sum(
            sign_vector_feasible(arr, signs)
            for signs in itertools.product((1, -1), repeat=4))
        assert count == 14  # 2 * (1 + 3 + 3) central regions

    def test_antipodal_symmetry(self):
        arr = moment_curve(5, 2)
        for signs in itertools.product((1, -1), repeat=5):
            flipped = tuple(-s for s in signs)
            assert sign_vector_feasible(arr, signs) == sign_vector_feasible(arr, flipped)

    def test_parity_of_feasible_count(self):
        rng = random.Random(3)
        for _ in range(5):
            covs = set()
            while len(covs) < 4:
                v = tuple(rng.randint(-2, 2) for _ in range(3))
                if any(v):
                    covs.add(v)
            arr = ProjArrangement(2, tuple(covs))
            total = sum(
                sign_vector_feasible(arr, signs)
                for signs in itertools.product((1, -1), repeat=4))
            assert total % 2 == 0

    def test_guard(self):
        arr = moment_curve(25, 2)
        with pytest.raises(TooLargeError):
            sign_vector_feasible(arr, (1,) * 25)


class TestCountRegionsOracle:
    @pytest.mark.parametrize("arr,expected", [
        (TRIANGLE, 4),
        (moment_curve(4, 3), 8),
        (near_pencil(5), 8),
    ])
    def test_examples(self, arr, expected):
        assert count_regions_oracle(arr) == expected

    @pytest.mark.parametrize("arr", [
        TRIANGLE,
        moment_curve(5, 2),
        moment_curve(6, 2),
        moment_curve(5, 3),
        moment_curve(6, 4),
        near_pencil(6),
        ProjArrangement(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3))),
        ProjArrangement(3, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
                            (1, 1, 1, 1), (1, -1, 2, 0))),
    ])
    def test_agrees_with_zaslavsky(self, arr):
        assert count_regions_oracle(arr) == count_regions_projective(arr)

    def test_deletion_never_increases_count(self):
        arr = moment_curve(7, 2)
        f = count_regions_projective(arr)
        for i in range(arr.n):
            assert count_regions_projective(arr.delete(i)) <= f
