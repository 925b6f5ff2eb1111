"""Quaternion, dual number and dual quaternion arithmetic with group actions.

Values are immutable and all operations are pure functions, so everything in
this module is safe to share between threads.  Coefficients may be exact
(``int``/``Fraction``) or ``float``; the algebra is identical in both
realizations.

Serialization order of a dual quaternion is (w, x, y, z) primal then
(w, x, y, z) dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DegenerateDisplacement, NotInvertible
from .scalars import is_exact, near_zero, scalar_from_json, scalar_to_json


@dataclass(frozen=True)
class DualNumber:
    """Dual number a + b*eps with eps^2 = 0."""

    a: object
    b: object = 0

    def __add__(self, other):
        other = _as_dual_number(other)
        return DualNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_dual_number(other)
        return DualNumber(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        other = _as_dual_number(other)
        return DualNumber(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _as_dual_number(other)
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def is_real(self, tol=None) -> bool:
        return near_zero(self.b, tol)


def _as_dual_number(x) -> DualNumber:
    if isinstance(x, DualNumber):
        return x
    return DualNumber(x, 0)


@dataclass(frozen=True)
class Quaternion:
    """Element w + x*i + y*j + z*k of the quaternion algebra."""

    w: object = 0
    x: object = 0
    y: object = 0
    z: object = 0

    def __add__(self, other):
        other = _as_quat(other)
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quat(other)
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        return _as_quat(other) - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, (DualQuaternion, DualNumber)):
                return NotImplemented
            return self.scale(other)
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def __rmul__(self, other):
        # Only scalars land here; quaternion*quaternion uses __mul__.
        return self.scale(other)

    def scale(self, s):
        return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def scalar_part(self):
        return self.w

    def vector_part(self) -> "Quaternion":
        return Quaternion(0, self.x, self.y, self.z)

    def dot(self, other: "Quaternion"):
        return (self.w * other.w + self.x * other.x
                + self.y * other.y + self.z * other.z)

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise NotInvertible("zero quaternion has no inverse")
        if isinstance(n, int):
            n = Fraction(n)
        return self.conj().scale(1 / n)

    def is_zero(self, tol=None) -> bool:
        return all(near_zero(c, tol) for c in self.coeffs())

    def coeffs(self):
        return (self.w, self.x, self.y, self.z)

    def __repr__(self):
        return f"Quaternion({self.w}, {self.x}, {self.y}, {self.z})"


def _as_quat(x) -> Quaternion:
    if isinstance(x, Quaternion):
        return x
    return Quaternion(x)


Q_ZERO = Quaternion()
Q_ONE = Quaternion(1)
Q_I = Quaternion(0, 1)
Q_J = Quaternion(0, 0, 1)
Q_K = Quaternion(0, 0, 0, 1)


@dataclass(frozen=True)
class DualQuaternion:
    """Dual quaternion p + eps*q stored as (primal, dual) quaternion pair."""

    primal: Quaternion = Q_ZERO
    dual: Quaternion = Q_ZERO

    @staticmethod
    def of(p=Q_ZERO, q=Q_ZERO) -> "DualQuaternion":
        return DualQuaternion(_as_quat(p), _as_quat(q))

    @staticmethod
    def from_coeffs(c: Iterable) -> "DualQuaternion":
        c = list(c)
        if len(c) != 8:
            raise ValueError("need 8 coefficients (w x y z | w x y z)")
        return DualQuaternion(Quaternion(*c[:4]), Quaternion(*c[4:]))

    def coeffs(self):
        return self.primal.coeffs() + self.dual.coeffs()

    def __add__(self, other):
        other = as_dq(other)
        return DualQuaternion(self.primal + other.primal, self.dual + other.dual)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_dq(other)
        return DualQuaternion(self.primal - other.primal, self.dual - other.dual)

    def __rsub__(self, other):
        return as_dq(other) - self

    def __neg__(self):
        return DualQuaternion(-self.primal, -self.dual)

    def __mul__(self, other):
        other = as_dq(other)
        return DualQuaternion(
            self.primal * other.primal,
            self.primal * other.dual + self.dual * other.primal,
        )

    def __rmul__(self, other):
        other = as_dq(other)
        return other * self

    def scale(self, s):
        return DualQuaternion(self.primal.scale(s), self.dual.scale(s))

    def conj(self) -> "DualQuaternion":
        return DualQuaternion(self.primal.conj(), self.dual.conj())

    def eps_conj(self) -> "DualQuaternion":
        return DualQuaternion(self.primal, -self.dual)

    def scalar_part(self) -> DualNumber:
        return DualNumber(self.primal.w, self.dual.w)

    def vector_part(self) -> "DualQuaternion":
        return DualQuaternion(self.primal.vector_part(), self.dual.vector_part())

    def norm(self) -> DualNumber:
        p, q = self.primal, self.dual
        return DualNumber(p.norm(), 2 * p.dot(q))

    def inverse(self) -> "DualQuaternion":
        p_inv = self.primal.inverse()
        return DualQuaternion(p_inv, -(p_inv * self.dual * p_inv))

    def is_zero(self, tol=None) -> bool:
        return self.primal.is_zero(tol) and self.dual.is_zero(tol)

    def study_dot(self):
        """h0*h4 + h1*h5 + h2*h6 + h3*h7; zero iff the Study condition holds."""
        return self.primal.dot(self.dual)

    def to_json(self):
        return [scalar_to_json(c) for c in self.coeffs()]

    @staticmethod
    def from_json(values, exact: bool = True) -> "DualQuaternion":
        return DualQuaternion.from_coeffs(
            [scalar_from_json(v, exact) for v in values])

    def __repr__(self):
        return f"DQ{self.coeffs()}"


def as_dq(x) -> DualQuaternion:
    if isinstance(x, DualQuaternion):
        return x
    if isinstance(x, Quaternion):
        return DualQuaternion(x, Q_ZERO)
    if isinstance(x, DualNumber):
        return DualQuaternion(_as_quat(x.a), _as_quat(x.b))
    return DualQuaternion(_as_quat(x), Q_ZERO)


DQ_ZERO = DualQuaternion()
DQ_ONE = DualQuaternion(Q_ONE, Q_ZERO)
DQ_EPS = DualQuaternion(Q_ZERO, Q_ONE)


def quat(w=0, x=0, y=0, z=0) -> Quaternion:
    return Quaternion(w, x, y, z)


def dq(p=(0, 0, 0, 0), d=(0, 0, 0, 0)) -> DualQuaternion:
    return DualQuaternion(Quaternion(*p), Quaternion(*d))


def proportional(a, b, tol=None) -> bool:
    """Projective equality of coefficient tuples via cross-multiplication."""
    ca = list(a)
    cb = list(b)
    a_zero = all(near_zero(c, tol) for c in ca)
    b_zero = all(near_zero(c, tol) for c in cb)
    if a_zero or b_zero:
        return a_zero and b_zero
    # Every 2x2 minor of the stacked coefficient rows must vanish.
    if all(is_exact(c) for c in ca + cb):
        return all(ca[i] * cb[j] == ca[j] * cb[i]
                   for i in range(len(ca)) for j in range(i + 1, len(ca)))
    scale = max(abs(float(c)) for c in ca) * max(abs(float(c)) for c in cb)
    return all(near_zero((ca[i] * cb[j] - ca[j] * cb[i]) / scale, tol)
               for i in range(len(ca)) for j in range(i + 1, len(ca)))


def dq_proportional(a: DualQuaternion, b: DualQuaternion, tol=None) -> bool:
    return proportional(a.coeffs(), b.coeffs(), tol)


@dataclass(frozen=True)
class PointH:
    """Homogeneous point x0 + eps(x1*i + x2*j + x3*k); projective equality."""

    h: DualQuaternion

    @staticmethod
    def from_coords(x0, x1, x2, x3) -> "PointH":
        return PointH(DualQuaternion(Quaternion(x0), Quaternion(0, x1, x2, x3)))

    @staticmethod
    def from_cartesian(x1, x2, x3) -> "PointH":
        return PointH.from_coords(1, x1, x2, x3)

    def coords(self):
        return (self.h.primal.w, self.h.dual.x, self.h.dual.y, self.h.dual.z)

    def cartesian(self):
        x0, x1, x2, x3 = self.coords()
        if x0 == 0:
            raise ZeroDivisionError("point at infinity has no Cartesian coordinates")
        if isinstance(x0, int):
            x0 = Fraction(x0)
        return (x1 / x0, x2 / x0, x3 / x0)

    def same_point(self, other: "PointH", tol=None) -> bool:
        return proportional(self.coords(), other.coords(), tol)


@dataclass(frozen=True)
class PluckerLine:
    """Line as vectorial dual quaternion: direction + eps*moment."""

    axis: DualQuaternion

    @staticmethod
    def from_direction_moment(d, m) -> "PluckerLine":
        return PluckerLine(DualQuaternion(Quaternion(0, *d), Quaternion(0, *m)))

    def direction(self):
        p = self.axis.primal
        return (p.x, p.y, p.z)

    def moment(self):
        q = self.axis.dual
        return (q.x, q.y, q.z)

    def coords(self):
        return self.direction() + self.moment()

    def plucker_defect(self):
        """direction . moment; zero iff the Plücker condition holds."""
        d = self.direction()
        m = self.moment()
        return d[0] * m[0] + d[1] * m[1] + d[2] * m[2]

    def is_valid(self, tol=None) -> bool:
        return (not all(near_zero(c, tol) for c in self.direction())
                and near_zero(self.plucker_defect(), tol))

    def same_line(self, other: "PluckerLine", tol=None) -> bool:
        return proportional(self.coords(), other.coords(), tol)

    def point_on(self) -> PointH:
        """The pedal point d x m / |d|^2 of the line w.r.t. the origin."""
        d = self.direction()
        m = self.moment()
        n = d[0] * d[0] + d[1] * d[1] + d[2] * d[2]
        if isinstance(n, int):
            n = Fraction(n)
        c = _cross(d, m)
        return PointH.from_cartesian(c[0] / n, c[1] / n, c[2] / n)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def act_on_point(h: DualQuaternion, x: PointH) -> PointH:
    """Displacement action y = eps_conj(h) * x * conj(h) on homogeneous points."""
    if near_zero(h.norm().a):
        raise DegenerateDisplacement("norm has zero real part")
    y = h.eps_conj() * x.h * h.conj()
    return PointH(DualQuaternion(Quaternion(y.primal.w),
                                 Quaternion(0, y.dual.x, y.dual.y, y.dual.z)))


def act_on_line(h: DualQuaternion, r: PluckerLine) -> PluckerLine:
    """Displacement action on Plücker lines: q = eps_conj(h * r~ * conj(h)).

    The sandwich formula takes the line in its rotation-axis encoding
    (direction - eps*moment, written r~ above) and returns classical
    Plücker coordinates, so the input is eps-conjugated first; this makes
    the identity act trivially and the action compose.
    """
    if near_zero(h.norm().a):
        raise DegenerateDisplacement("norm has zero real part")
    q = (h * r.axis.eps_conj() * h.conj()).eps_conj()
    return PluckerLine(q.vector_part())
