import math
import random

import pytest

from oracles import exhaustive_bottleneck, exhaustive_wasserstein
from ripsph.core import PersistenceDiagram, PersistencePair
from ripsph.distances import bottleneck_distance, wasserstein_distance


def diagram(points, dim=1, essentials=()):
    pairs = [PersistencePair(dim, b, d) for b, d in points]
    pairs += [PersistencePair(dim, b) for b in essentials]
    return PersistenceDiagram(pairs)


def random_diagram(rng, max_points=5, dim=1, allow_essential=True):
    points = []
    for _ in range(rng.randint(0, max_points)):
        b = rng.uniform(0, 2)
        points.append((b, b + rng.uniform(0, 2)))
    essentials = []
    if allow_essential and rng.random() < 0.3:
        essentials = [rng.uniform(0, 2) for _ in range(rng.randint(1, 2))]
    return diagram(points, dim=dim, essentials=essentials)


class TestBottleneck:
    def test_identity(self):
        d = diagram([(0.0, 4.0), (1.0, 2.0)], essentials=[0.5])
        assert bottleneck_distance(d, d, 1) == 0.0

    def test_single_point_vs_empty(self):
        assert bottleneck_distance(diagram([(1.0, 3.0)]), diagram([]), 1) == 1.0

    def test_direct_match_beats_diagonal(self):
        a = diagram([(0.0, 4.0)])
        b = diagram([(0.0, 5.0)])
        assert bottleneck_distance(a, b, 1) == 1.0

    def test_mismatched_essentials_give_inf(self):
        a = diagram([], essentials=[0.0])
        b = diagram([])
        assert math.isinf(bottleneck_distance(a, b, 1))

    def test_essential_births_compared(self):
        a = diagram([], essentials=[0.0])
        b = diagram([], essentials=[0.75])
        assert bottleneck_distance(a, b, 1) == 0.75

    def test_other_dimension_ignored(self):
        a = diagram([(0.0, 4.0)], dim=0)
        b = diagram([], dim=0)
        assert bottleneck_distance(a, b, 1) == 0.0


class TestWasserstein:
    def test_identity(self):
        d = diagram([(0.0, 4.0), (1.0, 2.0)])
        assert wasserstein_distance(d, d, 1) == 0.0

    def test_single_point_vs_empty(self):
        assert wasserstein_distance(diagram([(1.0, 3.0)]), diagram([]), 1) == 1.0

    def test_one_match_one_diagonal(self):
        a = diagram([(0.0, 2.0), (0.0, 4.0)])
        b = diagram([(0.0, 2.0)])
        assert wasserstein_distance(a, b, 1) == pytest.approx(2.0, abs=1e-12)

    def test_mismatched_essentials_give_inf(self):
        a = diagram([], essentials=[0.0, 1.0])
        b = diagram([], essentials=[0.0])
        assert math.isinf(wasserstein_distance(a, b, 1))


class TestOracleEquivalence:
    def test_matches_exhaustive_enumeration(self):
        rng = random.Random(61)
        for _ in range(100):
            a = random_diagram(rng)
            b = random_diagram(rng)
            fa = [(p.birth, p.death) for p in a.in_dimension(1)
                  if not p.is_essential]
            fb = [(p.birth, p.death) for p in b.in_dimension(1)
                  if not p.is_essential]
            ea = [p.birth for p in a.in_dimension(1) if p.is_essential]
            eb = [p.birth for p in b.in_dimension(1) if p.is_essential]
            expected_b = exhaustive_bottleneck(fa, fb, ea, eb)
            expected_w = exhaustive_wasserstein(fa, fb, ea, eb)
            got_b = bottleneck_distance(a, b, 1)
            got_w = wasserstein_distance(a, b, 1)
            if math.isinf(expected_b):
                assert math.isinf(got_b) and math.isinf(got_w)
            else:
                assert got_b == expected_b  # candidate-set search is exact
                assert got_w == pytest.approx(expected_w, abs=1e-9)


class TestMetricAxioms:
    def test_symmetry_triangle_and_identity(self):
        rng = random.Random(67)
        diagrams = [random_diagram(rng, max_points=4, allow_essential=False)
                    for _ in range(12)]
        for dist in (bottleneck_distance, wasserstein_distance):
            for a in diagrams:
                assert dist(a, a, 1) == 0.0
            for a in diagrams:
                for b in diagrams:
                    assert dist(a, b, 1) == dist(b, a, 1)
            for a in diagrams[:6]:
                for b in diagrams[:6]:
                    for c in diagrams[:6]:
                        assert dist(a, c, 1) <= dist(a, b, 1) + dist(b, c, 1) + 1e-9

    def test_zero_iff_equal_multisets(self):
        a = diagram([(0.0, 1.0)])
        b = diagram([(0.0, 1.000001)])
        assert bottleneck_distance(a, b, 1) > 0.0
        assert wasserstein_distance(a, b, 1) > 0.0

    def test_bottleneck_below_wasserstein(self):
        rng = random.Random(71)
        for _ in range(50):
            a = random_diagram(rng)
            b = random_diagram(rng)
            w = wasserstein_distance(a, b, 1)
            bd = bottleneck_distance(a, b, 1)
            if math.isinf(w):
                assert math.isinf(bd)
            else:
                assert bd <= w + 1e-12
