from fractions import Fraction as Q

import pytest

from wronski.elimination import count_real_intersections
from wronski.errors import DegenerateInstanceError, EliminationError
from wronski.heights import HeightFunction
from wronski.lattice import hexagon_example
from wronski.polynomial import Polynomial
from wronski.rng import Stream
from wronski.systems import wronski_from_points, wronski_pair

XY = ("x", "y")


def test_circle_line():
    circle = Polynomial(XY, {(2, 0): 1, (0, 2): 1, (0, 0): -1})
    diag = Polynomial(XY, {(0, 1): 1, (1, 0): -1})
    assert count_real_intersections(circle, diag) == (2, 2)


def test_circle_far_line():
    circle = Polynomial(XY, {(2, 0): 1, (0, 2): 1, (0, 0): -1})
    far = Polynomial(XY, {(0, 1): 1, (1, 0): 1, (0, 0): -10})
    assert count_real_intersections(circle, far) == (0, 2)


def test_common_component_detected():
    circle = Polynomial(XY, {(2, 0): 1, (0, 2): 1, (0, 0): -1})
    doubled = circle * Polynomial(XY, {(1, 0): 1, (0, 1): 3, (0, 0): 7})
    with pytest.raises(EliminationError):
        count_real_intersections(circle, doubled)


def test_tangency_raises_degenerate():
    parabola = Polynomial(XY, {(0, 1): 1, (2, 0): -1})   # y - x^2
    axis = Polynomial(XY, {(0, 1): 1})                   # y
    with pytest.raises(DegenerateInstanceError):
        count_real_intersections(parabola, axis)


def test_figure_parameter_counts():
    cases = [
        (3, (Q("-3.14"), Q("-8.13"), Q("3.61")), (Q("11.13"), Q("-9.34"), Q("1.82")),
         Q("0.98"), 3),
        (5, (Q("0.79"), Q("0.11"), Q("-0.72")), (Q("0.37"), Q("0.84"), Q("-0.97")),
         Q("0.6"), 5),
        (4, (Q("0.99"), Q("2.98"), Q("1.95")), (Q("14.46"), Q("1.57"), Q("2.21")),
         Q("0.98"), 0),
        (4, (Q("-10.46"), Q("-1.07"), Q("9.43")), (Q("12.62"), Q("9.97"), Q("-0.86")),
         Q("0.98"), 0),
    ]
    for delta, c, cp, t, expected in cases:
        pair = wronski_pair(delta, HeightFunction.rho(delta), c, cp, t)
        count, total = count_real_intersections(*pair.polys)
        assert count == expected
        assert total == delta * delta


def _random_c(stream):
    while True:
        vals = tuple(Q(stream.int_in(-50, 50), stream.int_in(1, 16)) for _ in range(3))
        if all(v != 0 for v in vals):
            return vals


def test_kushnirenko_totals_and_parity():
    stream = Stream(0xC0DE)
    done = 0
    while done < 20:
        delta = 2 + done % 2
        c = _random_c(stream)
        cp = _random_c(stream)
        t = Q(stream.int_in(1, 99), 100)
        pair = wronski_pair(delta, HeightFunction.rho(delta), c, cp, t)
        try:
            count, total = count_real_intersections(*pair.polys, seed=done)
        except DegenerateInstanceError:
            continue
        assert total == delta * delta
        assert count % 2 == (delta * delta) % 2
        done += 1


def test_hexagon_counts_land_in_two_or_six():
    hexa = hexagon_example()
    stream = Stream(0x4E8)
    for k in range(12):
        t = Q(stream.int_in(1, 2 ** 20), 2 ** 21)
        if stream.int_in(0, 1):
            t = -t
        c = [Q(stream.int_in(-50 * 64, 50 * 64), 64) for _ in range(6)]
        if any(v == 0 for v in c) or t == 0:
            continue
        w1 = wronski_from_points(hexa.points, hexa.coloring, hexa.heights, c[:3], t=t)
        w2 = wronski_from_points(hexa.points, hexa.coloring, hexa.heights, c[3:], t=t)
        count, total = count_real_intersections(w1, w2, seed=k)
        assert total == 6
        assert count in (2, 6)
