"""Floating-point line geometry: common perpendiculars, distances, angles.

Lines enter as Plücker coordinates (direction, moment) and are normalized to
unit direction before any measurement, so the default tolerance of 1e-9
applies to quantities in length units and direction cosines.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dualquat import PluckerLine
from .errors import IdenticalLines
from .scalars import EPS_TOL

#: Direction cross products below this are treated as parallel.
PARALLEL_TOL = 1e-12


def line_to_arrays(line: PluckerLine):
    """Unit-direction float representation (d, m) of a line."""
    d = np.array([float(c) for c in line.direction()])
    m = np.array([float(c) for c in line.moment()])
    n = np.linalg.norm(d)
    if n == 0:
        raise ValueError("line with zero direction")
    return d / n, m / n


def line_from_arrays(d, m) -> PluckerLine:
    return PluckerLine.from_direction_moment(tuple(map(float, d)),
                                             tuple(map(float, m)))


def point_on_line(d, m):
    """Pedal point of the line w.r.t. the origin (unit direction assumed)."""
    return np.cross(d, m)


def line_through(point, direction) -> PluckerLine:
    direction = np.asarray(direction, dtype=float)
    n = np.linalg.norm(direction)
    direction = direction / n
    return line_from_arrays(direction, np.cross(point, direction))


@dataclass
class CommonNormal:
    """Common perpendicular of two lines with its metric data."""

    line: PluckerLine
    distance: float
    angle: float        # twist angle in [0, pi/2]
    sin_angle: float
    cos_angle: float
    foot_a: np.ndarray
    foot_b: np.ndarray
    unique: bool = True


def common_normal(a: PluckerLine, b: PluckerLine,
                  tol: float = EPS_TOL) -> CommonNormal:
    """Common perpendicular, distance, angle and normal feet of two lines.

    Intersecting lines give distance 0 with the normal through the
    intersection point; parallel distinct lines give angle 0 and a
    non-unique transversal.
    """
    d1, m1 = line_to_arrays(a)
    d2, m2 = line_to_arrays(b)
    p1 = point_on_line(d1, m1)
    p2 = point_on_line(d2, m2)
    c = np.cross(d1, d2)
    s = float(np.linalg.norm(c))
    cos = abs(float(np.dot(d1, d2)))

    if s < PARALLEL_TOL:
        offset = p2 - p1
        offset -= np.dot(offset, d1) * d1
        dist = float(np.linalg.norm(offset))
        if dist <= tol:
            raise IdenticalLines("lines coincide; common normal undefined")
        direction = offset / dist
        return CommonNormal(line=line_through(p1, direction),
                            distance=dist, angle=0.0, sin_angle=0.0,
                            cos_angle=1.0, foot_a=p1, foot_b=p1 + offset,
                            unique=False)

    w0 = p1 - p2
    b_dot = float(np.dot(d1, d2))
    e = float(np.dot(d2, w0))
    d = float(np.dot(d1, w0))
    denom = 1.0 - b_dot * b_dot
    t1 = (b_dot * e - d) / denom
    t2 = (e - b_dot * d) / denom
    foot_a = p1 + t1 * d1
    foot_b = p2 + t2 * d2
    dist = float(np.linalg.norm(foot_a - foot_b))
    angle = float(np.arctan2(s, cos))
    return CommonNormal(line=line_through(foot_a, c / s),
                        distance=dist, angle=angle, sin_angle=s,
                        cos_angle=cos, foot_a=foot_a, foot_b=foot_b)


def line_line_distance(a: PluckerLine, b: PluckerLine,
                       tol: float = EPS_TOL) -> float:
    try:
        return common_normal(a, b, tol).distance
    except IdenticalLines:
        return 0.0


def direction_cosine(a: PluckerLine, b: PluckerLine) -> float:
    d1, _ = line_to_arrays(a)
    d2, _ = line_to_arrays(b)
    return abs(float(np.dot(d1, d2)))
