import pytest

from wronski.errors import DomainError
from wronski.lattice import hexagon_example
from wronski.orient import (epsilon_vectors, facet_system, gf2_rank, orientable,
                            orientation_witness, sheared_triangle, standard_triangle)


def test_facet_system_sheared_triangle():
    fs = facet_system(sheared_triangle(5))
    assert fs.rows == (((-1, 0), 5), ((0, 1), 0), ((1, -1), 0))


def test_facet_system_unit_square():
    fs = facet_system([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert sorted(b for _, b in fs.rows) == [0, 0, 1, 1]


def test_facet_system_standard_triangle():
    fs = facet_system(standard_triangle(3))
    assert set(fs.rows) == {((1, 0), 0), ((0, 1), 0), ((-1, -1), 3)}


def test_facet_system_ignores_interior_and_edge_points():
    fs = facet_system(hexagon_example().points)
    assert len(fs.rows) == 6


def test_facet_system_collinear():
    with pytest.raises(DomainError):
        facet_system([(0, 0), (1, 1), (2, 2)])


def test_epsilon_vectors_sheared_triangle():
    odd = epsilon_vectors(facet_system(sheared_triangle(3)))
    assert odd == [(1, 1, 0), (0, 0, 1), (0, 1, 1)]
    even = epsilon_vectors(facet_system(sheared_triangle(4)))
    assert even[0] == (0, 1, 0)


def test_gf2_rank_matches_parity_argument():
    for d in range(1, 21):
        eps = epsilon_vectors(facet_system(sheared_triangle(d)))
        expected = 3 if d % 2 == 1 else 2
        assert gf2_rank(eps, 3) == expected


def test_orientable_iff_odd():
    for d in range(1, 21):
        assert orientable(facet_system(standard_triangle(d))) == (d % 2 == 1)


def test_orientable_unimodular_invariance():
    for d in range(1, 21):
        a = orientable(facet_system(standard_triangle(d)))
        b = orientable(facet_system(sheared_triangle(d)))
        assert a == b


def test_orientable_hexagon():
    assert orientable(facet_system(hexagon_example().points))


def test_witness_verified_when_present():
    for d in (1, 3, 5, 7, 19):
        fs = facet_system(standard_triangle(d))
        phi = orientation_witness(fs)
        assert phi is not None
        for v in epsilon_vectors(fs):
            assert sum(a * b for a, b in zip(phi, v)) % 2 == 1
    assert orientation_witness(facet_system(standard_triangle(4))) is None
