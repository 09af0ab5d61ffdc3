from itertools import product

import pytest

from figulat.errors import BudgetExceededError, DomainError
from figulat.facets import OrderedSetPartition, enumerate_facets
from figulat.lattice import (
    LatticePoint,
    count_lattice_points,
    cube_points,
    enumerate_points,
    facet_contains,
    point_multiplicity,
)


def pt(coords, n):
    return LatticePoint(tuple(coords), n)


def scan_cube(f, p, n):
    """Membership by scanning every cube point."""
    return [
        coords
        for coords in product(range(n), repeat=p)
        if facet_contains(f, pt(coords, n))
    ]


class TestLatticePoint:
    def test_validates_range(self):
        with pytest.raises(DomainError):
            pt((0, 2), 2)
        with pytest.raises(DomainError):
            pt((-1,), 3)

    def test_text(self):
        assert pt((1, 0, 2), 3).text() == "1,0,2"


class TestFacetContains:
    def test_weakly_decreasing(self):
        f = OrderedSetPartition(((1,), (2,)))
        assert facet_contains(f, pt((1, 0), 2))
        assert facet_contains(f, pt((1, 1), 2))
        assert not facet_contains(f, pt((0, 1), 2))

    def test_equality_block(self):
        f = OrderedSetPartition(((1, 2),))
        assert not facet_contains(f, pt((1, 0), 2))
        assert facet_contains(f, pt((1, 1), 2))

    def test_dimension_mismatch(self):
        f = OrderedSetPartition(((1, 2),))
        with pytest.raises(DomainError):
            facet_contains(f, pt((1, 0, 0), 2))


class TestEnumeratePoints:
    def test_diagonal(self):
        f = OrderedSetPartition(((1, 2),))
        points = [p.coords for p in enumerate_points(f, 2)]
        assert points == [(0, 0), (1, 1)]

    def test_half_square(self):
        f = OrderedSetPartition(((1,), (2,)))
        points = [p.coords for p in enumerate_points(f, 2)]
        assert points == [(0, 0), (1, 0), (1, 1)]

    def test_side_one(self):
        f = OrderedSetPartition(((1,), (2, 3)))
        assert [p.coords for p in enumerate_points(f, 1)] == [(0, 0, 0)]

    def test_matches_cube_scan(self):
        for p in range(1, 5):
            for l in range(p):
                for f in enumerate_facets(p, l):
                    for n in range(1, 5):
                        enumerated = [q.coords for q in enumerate_points(f, n)]
                        assert sorted(enumerated) == sorted(scan_cube(f, p, n))
                        assert len(enumerated) == len(set(enumerated))

    def test_budget(self):
        f = OrderedSetPartition(((1,), (2,), (3,)))
        with pytest.raises(BudgetExceededError):
            enumerate_points(f, 100, max_points=10)


class TestCountLatticePoints:
    def test_examples(self):
        assert count_lattice_points(OrderedSetPartition(((1,), (2,))), 2) == 3
        assert count_lattice_points(OrderedSetPartition(((1, 2, 3),)), 5) == 5
        assert count_lattice_points(OrderedSetPartition(((1,), (2,), (3,))), 2) == 4

    def test_matches_enumeration(self):
        for p in range(1, 5):
            for l in range(p):
                for f in enumerate_facets(p, l):
                    for n in range(1, 5):
                        assert count_lattice_points(f, n) == sum(
                            1 for _ in enumerate_points(f, n)
                        )

    def test_uniform_over_same_block_count(self):
        for l in range(4):
            counts = {count_lattice_points(f, 3) for f in enumerate_facets(4, l)}
            assert len(counts) == 1


class TestCubePoints:
    def test_lexicographic_and_complete(self):
        points = [q.coords for q in cube_points(2, 3)]
        assert points == sorted(product(range(3), repeat=2))

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            cube_points(8, 10, max_points=10 ** 6)


class TestPointMultiplicity:
    def test_hand_checked_pairs(self):
        assert point_multiplicity(pt((1, 0), 2), 2) == 1
        assert point_multiplicity(pt((1, 1), 2), 2) == 1

    def test_origin(self):
        for p in range(1, 5):
            assert point_multiplicity(pt((0,) * p, 1), p) == 1

    def test_always_one(self):
        for p in range(1, 5):
            for n in range(1, 5):
                for q in cube_points(p, n):
                    assert point_multiplicity(q, p) == 1

    def test_every_point_in_a_top_face(self):
        for p in range(1, 5):
            top = enumerate_facets(p, 0)
            for q in cube_points(p, 3):
                assert any(facet_contains(f, q) for f in top)

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            point_multiplicity(pt((0, 0), 2), 3)
