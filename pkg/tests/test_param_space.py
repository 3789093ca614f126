from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from temperedk import (
    ComplexComponent,
    ComplexTemperedPoint,
    Component,
    LeviShape,
    RealTemperedPoint,
    SigmaOrbit,
    canonicalize_point,
    complex_components,
    cone_chart,
    real_components,
)

from oracles import complex_components_bruteforce, real_components_bruteforce


def component(q, r, gl2, gl1):
    return Component(LeviShape(q, r), SigmaOrbit(tuple(gl2), tuple(gl1)))


class TestComponent:
    def test_dimension_is_block_count(self):
        assert component(2, 1, (1, 3), (0,)).dimension == 3

    def test_orbit_must_fit_shape(self):
        with pytest.raises(ValueError):
            Component(LeviShape(1, 0), SigmaOrbit((1, 2), ()))
        with pytest.raises(ValueError):
            Component(LeviShape(0, 2), SigmaOrbit((), (0,)))

    def test_free_iff_trivial_isotropy(self):
        assert component(0, 2, (), (0, 1)).is_free
        assert not component(0, 2, (), (0, 0)).is_free
        assert component(2, 0, (1, 2), ()).kind == "free"
        assert component(2, 0, (2, 2), ()).kind == "cone"

    def test_key_format(self):
        assert component(1, 1, (2,), (0,)).key == "shape:1,1|gl2:2|gl1:0"
        assert component(2, 0, (1, 3), ()).key == "shape:2,0|gl2:1,3|gl1:"
        assert component(0, 1, (), (1,)).key == "shape:0,1|gl2:|gl1:1"


class TestRealCatalog:
    def test_gl2_catalog_at_cutoff_one(self):
        catalog = real_components(2, 1)
        facts = [(c.shape.q, c.orbit.gl2_labels, c.orbit.gl1_labels, c.kind, c.dimension)
                 for c in catalog]
        assert facts == [
            (1, (1,), (), "free", 1),
            (0, (), (0, 0), "cone", 2),
            (0, (), (0, 1), "free", 2),
            (0, (), (1, 1), "cone", 2),
        ]

    def test_gl1_catalog(self):
        catalog = real_components(1, 1)
        assert [(c.kind, c.dimension) for c in catalog] == [("free", 1), ("free", 1)]

    def test_gl3_catalog_at_cutoff_two(self):
        catalog = real_components(3, 2)
        free = [c for c in catalog if c.is_free]
        cones = [c for c in catalog if not c.is_free]
        assert len(free) == 4 and all(c.shape == LeviShape(1, 1) for c in free)
        assert {(c.orbit.gl2_labels[0], c.orbit.gl1_labels[0]) for c in free} == {
            (1, 0), (1, 1), (2, 0), (2, 1),
        }
        assert len(cones) == 4 and all(c.shape == LeviShape(0, 3) for c in cones)

    def test_count_formula(self):
        for n in range(1, 7):
            for cutoff in range(1, 5):
                catalog = real_components(n, cutoff)
                expected = sum(
                    comb(cutoff + q - 1, q) * (n - 2 * q + 1) for q in range(n // 2 + 1)
                )
                assert len(catalog) == expected

    def test_matches_bruteforce(self):
        for n in range(1, 7):
            for cutoff in range(1, 4):
                got = [
                    (c.shape.q, c.shape.r, c.orbit.gl2_labels, c.orbit.gl1_labels,
                     c.dimension, c.is_free)
                    for c in real_components(n, cutoff)
                ]
                assert got == real_components_bruteforce(n, cutoff)

    def test_keys_unique(self):
        catalog = real_components(6, 3)
        keys = [c.key for c in catalog]
        assert len(set(keys)) == len(keys)

    def test_three_gl1_blocks_force_cones(self):
        for n in range(3, 9):
            for c in real_components(n, 2):
                if c.shape.r >= 3:
                    assert not c.is_free

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            real_components(0, 1)
        with pytest.raises(ValueError):
            real_components(2, 0)


class TestComplexCatalog:
    def test_singletons(self):
        catalog = complex_components(1, 2)
        assert [c.labels for c in catalog] == [(-2,), (-1,), (0,), (1,), (2,)]
        assert all(c.is_free for c in catalog)

    def test_pairs_at_cutoff_one(self):
        catalog = complex_components(2, 1)
        assert len(catalog) == 6
        free = {c.labels for c in catalog if c.is_free}
        cone = {c.labels for c in catalog if not c.is_free}
        assert free == {(-1, 0), (-1, 1), (0, 1)}
        assert cone == {(-1, -1), (0, 0), (1, 1)}

    def test_repeated_zero_is_cone(self):
        assert ComplexComponent((0, 0)).kind == "cone"

    def test_labels_canonicalized(self):
        assert ComplexComponent((3, -1, 0)).labels == (-1, 0, 3)
        assert ComplexComponent((2, -2)).key == "labels:-2,2"

    def test_matches_bruteforce(self):
        for n in range(1, 5):
            for cutoff in range(1, 4):
                got = [(c.labels, c.is_free) for c in complex_components(n, cutoff)]
                assert got == complex_components_bruteforce(n, cutoff)

    def test_dimension_is_n(self):
        assert all(c.dimension == 3 for c in complex_components(3, 1))


class TestConeChart:
    def test_fully_repeated_triple(self):
        chart = cone_chart(component(0, 3, (), (0, 0, 0)))
        assert (chart.num_lines, chart.num_rays) == (1, 2)

    def test_free_component_has_no_rays(self):
        chart = cone_chart(component(0, 2, (), (0, 1)))
        assert (chart.num_lines, chart.num_rays) == (2, 0)

    def test_two_pairs(self):
        chart = cone_chart(ComplexComponent((1, 1, 2, 2)))
        assert (chart.num_lines, chart.num_rays) == (2, 2)

    def test_chart_dimensions_add_up(self):
        for c in real_components(5, 3) + complex_components(3, 2):
            chart = cone_chart(c)
            assert chart.num_lines + chart.num_rays == c.dimension
            assert (chart.num_rays == 0) == c.is_free


class TestPoints:
    def test_length_validation(self):
        with pytest.raises(ValueError):
            RealTemperedPoint(component(1, 1, (2,), (0,)), (0.5,))
        with pytest.raises(ValueError):
            ComplexTemperedPoint(ComplexComponent((0, 1)), (1.0, 2.0, 3.0))

    def test_canonicalize_repeated_pair(self):
        point = ComplexTemperedPoint(ComplexComponent((0, 0)), (3.0, -1.0))
        assert canonicalize_point(point).params == (-1.0, 3.0)

    def test_canonicalize_distinct_pair_is_identity(self):
        point = ComplexTemperedPoint(ComplexComponent((0, 1)), (3.0, -1.0))
        assert canonicalize_point(point).params == (3.0, -1.0)

    def test_canonicalize_sorts_only_within_blocks(self):
        point = ComplexTemperedPoint(ComplexComponent((2, 2, 5)), (1.0, 0.0, 7.0))
        assert canonicalize_point(point).params == (0.0, 1.0, 7.0)

    def test_canonicalize_real_point_blockwise(self):
        c = component(2, 2, (1, 1), (0, 0))
        point = RealTemperedPoint(c, (4.0, -2.0, 9.0, 5.0))
        assert canonicalize_point(point).params == (-2.0, 4.0, 5.0, 9.0)

    def test_gl2_and_gl1_blocks_do_not_mix(self):
        c = component(1, 1, (1,), (0,))
        point = RealTemperedPoint(c, (4.0, -2.0))
        assert canonicalize_point(point).params == (4.0, -2.0)

    def test_canonicalize_idempotent(self):
        point = ComplexTemperedPoint(ComplexComponent((1, 1, 1)), (2.0, -3.0, 0.5))
        once = canonicalize_point(point)
        assert canonicalize_point(once) == once

    @given(st.permutations([0.5, -1.5, 2.0, 0.0]))
    def test_canonicalize_permutation_invariant(self, params):
        c = ComplexComponent((4, 4, 4, 4))
        point = ComplexTemperedPoint(c, tuple(params))
        reference = ComplexTemperedPoint(c, (-1.5, 0.0, 0.5, 2.0))
        assert canonicalize_point(point) == reference
