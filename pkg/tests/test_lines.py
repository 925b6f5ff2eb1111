"""Float line geometry: common perpendiculars, distances, angles."""

import math
import random

import numpy as np
import pytest
from scipy.optimize import minimize

from bennett8r.dualquat import PluckerLine
from bennett8r.errors import IdenticalLines
from bennett8r.lines import (common_normal, direction_cosine,
                             line_line_distance, line_through, line_to_arrays,
                             point_on_line)


def _line(point, direction):
    return line_through(np.array(point, float), np.array(direction, float))


def test_skew_perpendicular_pair():
    a = _line((0, 0, 0), (1, 0, 0))
    b = _line((0, 0, 1), (0, 1, 0))
    cn = common_normal(a, b)
    assert cn.unique
    assert cn.distance == pytest.approx(1.0)
    assert cn.angle == pytest.approx(math.pi / 2)
    assert cn.sin_angle == pytest.approx(1.0)
    assert np.allclose(cn.foot_a, [0, 0, 0])
    assert np.allclose(cn.foot_b, [0, 0, 1])
    d, _ = line_to_arrays(cn.line)
    assert np.allclose(np.abs(d), [0, 0, 1])


def test_intersecting_lines():
    a = _line((0, 0, 0), (1, 0, 0))
    b = _line((1, 0, 0), (1, 1, 0))
    cn = common_normal(a, b)
    assert cn.distance == pytest.approx(0.0, abs=1e-12)
    assert cn.angle == pytest.approx(math.pi / 4)
    assert np.allclose(cn.foot_a, [1, 0, 0])


def test_parallel_lines():
    a = _line((0, 0, 0), (1, 0, 0))
    b = _line((0, 3, 4), (2, 0, 0))
    cn = common_normal(a, b)
    assert not cn.unique
    assert cn.distance == pytest.approx(5.0)
    assert cn.angle == 0.0


def test_coincident_lines_raise():
    a = _line((0, 1, 2), (1, 1, 0))
    b = _line((1, 2, 2), (-2, -2, 0))
    with pytest.raises(IdenticalLines):
        common_normal(a, b)
    assert line_line_distance(a, b) == 0.0


def test_obtuse_direction_pair_angle_is_acute():
    a = _line((0, 0, 0), (1, 0, 0))
    b = _line((0, 0, 1), (-1, 1e-3, 0))
    cn = common_normal(a, b)
    assert 0 <= cn.angle <= math.pi / 2


def test_feet_lie_on_lines_and_normal_is_perpendicular():
    rng = random.Random(11)
    for _ in range(30):
        p1, d1, p2, d2 = [np.array([rng.uniform(-5, 5) for _ in range(3)])
                          for _ in range(4)]
        if np.linalg.norm(np.cross(d1, d2)) < 1e-6:
            continue
        a, b = _line(p1, d1), _line(p2, d2)
        cn = common_normal(a, b)
        u1, m1 = line_to_arrays(a)
        u2, m2 = line_to_arrays(b)
        # Feet on the respective lines.
        assert np.linalg.norm(np.cross(cn.foot_a - point_on_line(u1, m1), u1)) \
            < 1e-9 * max(1, np.linalg.norm(cn.foot_a))
        assert np.linalg.norm(np.cross(cn.foot_b - point_on_line(u2, m2), u2)) \
            < 1e-9 * max(1, np.linalg.norm(cn.foot_b))
        seg = cn.foot_a - cn.foot_b
        if cn.distance > 1e-9:
            assert abs(np.dot(seg, u1)) < 1e-9 * np.linalg.norm(seg)
            assert abs(np.dot(seg, u2)) < 1e-9 * np.linalg.norm(seg)


def test_distance_matches_minimization_oracle():
    rng = random.Random(12)
    for _ in range(10):
        p1, d1, p2, d2 = [np.array([rng.uniform(-4, 4) for _ in range(3)])
                          for _ in range(4)]
        if np.linalg.norm(np.cross(d1, d2)) < 1e-6:
            continue
        a, b = _line(p1, d1), _line(p2, d2)
        u1 = d1 / np.linalg.norm(d1)
        u2 = d2 / np.linalg.norm(d2)

        def gap(x):
            return np.sum((p1 + x[0] * u1 - p2 - x[1] * u2) ** 2)

        best = minimize(gap, [0.0, 0.0], method="Nelder-Mead",
                        options={"xatol": 1e-12, "fatol": 1e-18,
                                 "maxiter": 5000})
        assert common_normal(a, b).distance == pytest.approx(
            math.sqrt(best.fun), abs=1e-6)


def test_angle_matches_direction_cosine():
    a = _line((0, 0, 0), (1, 0, 0))
    b = _line((0, 0, 1), (1, 1, 0))
    cn = common_normal(a, b)
    assert math.cos(cn.angle) == pytest.approx(direction_cosine(a, b))
    assert direction_cosine(a, b) == pytest.approx(1 / math.sqrt(2))


def test_zero_direction_rejected():
    with pytest.raises(ValueError):
        line_to_arrays(PluckerLine.from_direction_moment((0, 0, 0), (1, 0, 0)))
