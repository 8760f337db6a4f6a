"""Additive heuristic: exactness on quads, the 1/3 error bound, tightness."""

import random
from fractions import Fraction

import pytest

from polytri import (
    Polygon,
    TriangleWeightFn,
    error_ratio,
    gen_heuristic_worst,
    gen_random,
    heuristic_triangulate,
    solve_bst,
    triangulation_weight,
    validate_triangulation,
)


class TestHeuristicTriangulate:
    def test_triangle(self):
        tri, report = heuristic_triangulate(Polygon((2, 3, 4)))
        assert tri.edges == frozenset() and report.heuristic_weight == 9

    def test_output_is_a_triangulation(self):
        fa = TriangleWeightFn.additive()
        rng = random.Random(109)
        for _ in range(100):
            n = rng.randint(3, 80)
            poly = Polygon(tuple(rng.randint(1, 10**6) for _ in range(n)))
            tri, report = heuristic_triangulate(poly)
            assert validate_triangulation(poly, tri).ok
            assert len(tri.edges) == n - 3
            assert report.heuristic_weight == tri.weight
            assert tri.weight == triangulation_weight(poly, tri, fa)

    def test_exact_on_quadrilaterals(self):
        fa = TriangleWeightFn.additive()
        rng = random.Random(113)
        for _ in range(200):
            poly = Polygon(tuple(rng.randint(1, 10**4) for _ in range(4)))
            tri, _ = heuristic_triangulate(poly)
            assert tri.weight == solve_bst(poly, fa)[0]

    def test_fan_when_weights_increase_clockwise(self):
        poly = Polygon((7, 1, 2, 3, 4, 5, 6))
        tri, _ = heuristic_triangulate(poly)
        # v1 = node 1; nothing ever beats the fan join, so all edges touch v1
        assert tri.edges == frozenset({(1, 3), (1, 4), (1, 5), (1, 6)})

    def test_error_below_one_third(self):
        rng = random.Random(127)
        for _ in range(120):
            n = rng.randint(4, 200)
            poly = Polygon(tuple(rng.randint(1, 10**5) for _ in range(n)))
            report = error_ratio(poly)
            assert report.ratio == Fraction(
                report.heuristic_weight - report.optimal_weight, report.optimal_weight
            )
            assert report.ratio < Fraction(1, 3)


class TestWorstCaseFamily:
    @pytest.mark.parametrize("t", [2, 4, 10, 100])
    def test_error_is_closed_form(self, t):
        report = error_ratio(gen_heuristic_worst(5, t))
        assert report.ratio == Fraction(t - 1, 3 * (t + 2))

    def test_family_golden(self):
        poly = gen_heuristic_worst(5, 4)
        assert poly.weights == (1, 1, 4, 4, 1)
        report = error_ratio(poly)
        assert (report.heuristic_weight, report.optimal_weight) == (21, 18)
        assert report.ratio == Fraction(1, 6)

    def test_error_increases_with_t(self):
        ratios = [error_ratio(gen_heuristic_worst(5, 10**k)).ratio for k in range(1, 5)]
        assert all(a < b for a, b in zip(ratios, ratios[1:]))
        assert ratios[-1] > Fraction(1, 3) - Fraction(1, 1000)
