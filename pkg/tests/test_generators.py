from fractions import Fraction

import pytest

from chambers import generators as gn
from chambers.oracle import count_regions_oracle
from chambers.projective import count_regions_projective, max_point_multiplicity, validate
from chambers.toric import count_regions_toric


class TestGeneralPosition:
    @pytest.mark.parametrize("n,d,expected", [(5, 2, 11), (4, 3, 8), (6, 3, 26)])
    def test_counts(self, n, d, expected):
        arr = gn.general_position(n, d)
        assert validate(arr) == []
        assert count_regions_projective(arr) == expected
        assert gn.general_position_count(n, d) == expected

    @pytest.mark.parametrize("n,d", [(n, d) for d in (2, 3, 4) for d_, n in [(d, d + 2), (d, d + 4)]])
    def test_multiplicity_is_d(self, n, d):
        assert max_point_multiplicity(gn.general_position(n, d)).m == d


class TestDoublePencil:
    @pytest.mark.parametrize("a,b,common,n,f", [
        (2, 4, True, 5, 8),     # near-pencil, 2n-2
        (3, 4, True, 6, 12),    # 3n-6
        (2, 4, False, 6, 13),   # 3n-5
        (4, 5, True, 8, 20),    # 4n-12
        (3, 5, False, 8, 22),
    ])
    def test_counts_both_engines(self, a, b, common, n, f):
        arr = gn.double_pencil(a, b, common)
        assert arr.n == n
        assert validate(arr) == []
        assert gn.double_pencil_count(a, b, common) == f
        assert count_regions_projective(arr) == f
        assert count_regions_oracle(arr) == f

    def test_degenerate_parameters(self):
        with pytest.raises(gn.PlacementError):
            gn.double_pencil(1, 5, True)


class TestPencilWithExtras:
    @pytest.mark.parametrize("q,program", [
        (5, ("fresh",)),
        (5, ("fresh", "fresh")),
        (5, ("fresh", "cross1")),
        (4, ("fresh", "cross1", "cross2")),
        (4, ("fresh", "stack", "stack")),
        (5, ("fresh", "fresh", "stack_cross")),
        (4, ("fresh", "fresh", "cross2", "cross1")),
    ])
    def test_predicted_count_matches(self, q, program):
        predicted = gn.pencil_with_extras_count(q, program)
        assert predicted is not None
        arr = gn.pencil_with_extras(q, program)
        assert validate(arr) == []
        assert count_regions_projective(arr) == predicted

    def test_near_pencil_equivalence(self):
        assert gn.pencil_with_extras_count(7, ("fresh",)) == 2 * 8 - 2

    @pytest.mark.parametrize("program", [
        ("cross1",),              # no points exist yet
        ("fresh", "cross2"),      # two disjoint anchors impossible
        ("fresh", "stack_cross"),  # no non-stacked extra available
    ])
    def test_infeasible_programs(self, program):
        assert gn.pencil_extras_savings(program) is None
        with pytest.raises(gn.PlacementError):
            gn.pencil_with_extras(6, program)

    def test_savings_capped_by_index(self):
        # each unit of saving needs a distinct earlier extra
        savings = gn.pencil_extras_savings(("fresh", "stack", "stack", "stack"))
        assert savings == [0, 1, 2, 3]


class TestCone:
    def test_triangle_cone_doubles(self):
        base = gn.general_position(3, 2)
        arr = gn.cone(base, extras=1)
        assert arr.n == 4 and arr.d == 3
        assert count_regions_projective(arr) == 8 == 2 * 4

    @pytest.mark.parametrize("base_builder,phi", [
        (lambda: gn.near_pencil(10), 18),
        (lambda: gn.double_pencil(3, 8, True), 24),
        (lambda: gn.double_pencil(2, 8, False), 25),
    ])
    def test_doubling_property(self, base_builder, phi):
        base = base_builder()
        assert count_regions_projective(base) == phi
        arr = gn.cone(base, extras=1)
        assert count_regions_projective(arr) == 2 * phi
        assert max_point_multiplicity(arr).m == base.n

    def test_iterated_cone_hits_mcmullen(self):
        from chambers.bounds import bound_mcmullen
        arr = gn.near_pencil(6)
        f = count_regions_projective(arr)
        for d in (3, 4, 5):
            arr = gn.cone(arr, extras=1)
            f *= 2
            assert count_regions_projective(arr) == f
            assert f == bound_mcmullen(arr.n, d).value

    def test_two_generic_extras_count(self):
        base = gn.near_pencil(6)
        arr = gn.cone(base, extras=2)
        expected = gn.cone_count(10, 2, base_n=6)
        assert expected == 36
        assert count_regions_projective(arr) == expected

    def test_extras_zero_rejected(self):
        with pytest.raises(gn.PlacementError):
            gn.cone(gn.near_pencil(5), extras=0)


class TestTwoExtraPlanes:
    def test_spec_value_at_n11(self):
        base = gn.near_pencil(9)
        arr = gn.two_extra_planes(base, coincidences=1)
        assert arr.n == 11
        assert count_regions_projective(arr) == 56 == 3 * 16 + 8

    def test_no_coincidence(self):
        base = gn.near_pencil(9)
        arr = gn.two_extra_planes(base, coincidences=0)
        assert count_regions_projective(arr) == 3 * 16 + 9

    def test_line_in_union(self):
        base = gn.near_pencil(9)
        arr = gn.two_extra_planes(base, line_in_union=True)
        assert count_regions_projective(arr) == 48

    def test_pencil_collapse_on_double_pencil_base(self):
        base = gn.double_pencil(3, 7, True)  # 9 lines, f = 21
        arr = gn.two_extra_planes(base, coincidences=2)
        assert count_regions_projective(arr) == 3 * 21 + 9 - 2
        collapsed = gn.two_extra_planes(base, coincidences=6)  # b - 1
        assert count_regions_projective(collapsed) == 3 * 21 + 3

    def test_unreachable_coincidences(self):
        base = gn.near_pencil(9)
        with pytest.raises(gn.PlacementError):
            gn.two_extra_planes(base, coincidences=2)
        with pytest.raises(gn.PlacementError):
            gn.two_extra_planes(base, coincidences=4)


class TestThreeExtraPlanes:
    @pytest.mark.parametrize("s2,s3,s23", [
        (0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (1, 1, 2),
    ])
    def test_anchored_counts(self, s2, s3, s23):
        base = gn.near_pencil(8)
        expected = gn.three_extra_planes_count(14, 8, s2, s3, s23)
        arr = gn.three_extra_planes(base, s2, s3, s23)
        assert arr.n == 11
        assert count_regions_projective(arr) == expected

    def test_multiplicity_is_n_minus_3(self):
        base = gn.near_pencil(8)
        arr = gn.three_extra_planes(base, 0, 0, 0)
        assert max_point_multiplicity(arr).m == 8


class TestToricConstructionA:
    @pytest.mark.parametrize("n,d,k,f", [
        (3, 2, 1, 2),
        (5, 3, 2, 3),
        (5, 3, 0, 5),
        (4, 2, 0, 4),
    ])
    def test_counts(self, n, d, k, f):
        arr = gn.toric_construction_a(n, d, k)
        assert arr.n == n
        assert count_regions_toric(arr) == f == n - k

    def test_offset_collision(self):
        with pytest.raises(gn.OffsetCollisionError):
            gn.toric_construction_a(3, 2, 1, offsets=[Fraction(1, 3), Fraction(4, 3)])

    def test_custom_offsets(self):
        arr = gn.toric_construction_a(3, 2, 1, offsets=[Fraction(1, 3), Fraction(2, 3)])
        assert count_regions_toric(arr) == 2


class TestToricConstructionB:
    @pytest.mark.parametrize("n,d,k,f", [
        (3, 2, 1, 3),
        (5, 3, 0, 4),
        (4, 2, 3, 7),
        (3, 3, 4, 4),
    ])
    def test_counts(self, n, d, k, f):
        arr = gn.toric_construction_b(n, d, k)
        assert arr.n == n
        assert gn.toric_construction_b_count(n, d, k) == f
        assert count_regions_toric(arr) == f

    def test_custom_offset_quarter(self):
        arr = gn.toric_construction_b(3, 2, 1, offsets=[Fraction(1, 4)])
        assert count_regions_toric(arr) == 3

    def test_triple_intersection_rejected(self):
        with pytest.raises(gn.TripleIntersectionError):
            gn.toric_construction_b(3, 2, 2, offsets=[Fraction(1, 4)])

    def test_default_offsets_never_collide(self):
        for n in range(3, 9):
            for k in range(6):
                gn.toric_construction_b(n, 2, k)

    def test_degenerate_slope_zero_at_n_equals_d(self):
        with pytest.raises(gn.PlacementError):
            gn.toric_construction_b(2, 2, 0)
