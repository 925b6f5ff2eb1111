"""Polynomial rings over (dual) quaternions with central indeterminates t, s.

``BiPoly`` stores coefficients sparsely by (t-power, s-power); ``UniPoly`` is
the univariate special case with an indeterminate tag.  The indeterminates
commute with each other and with all coefficients, so the product convolution
keeps the coefficient factors in left-to-right order.

Evaluation supports the point at infinity via the ``INF`` sentinel: the value
at infinity in one variable is the leading-coefficient polynomial in that
variable, evaluated at the remaining argument; at infinity in both variables
it is the coefficient of the full bidegree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dualquat import DQ_ONE, DualQuaternion, as_dq, near_zero
from .errors import SingularMap, ZeroDivisor


class _Infinity:
    """Sentinel for the projective parameter value at infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _Infinity()


def is_inf(x) -> bool:
    return x is INF or (isinstance(x, float) and math.isinf(x))


class BiPoly:
    """Bivariate polynomial sum c_ij * t^i * s^j with dual quaternion c_ij."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for (i, j), c in dict(coeffs).items():
                c = as_dq(c)
                if not c.is_zero():
                    cleaned[(int(i), int(j))] = c
        self.coeffs = cleaned

    @staticmethod
    def constant(c) -> "BiPoly":
        return BiPoly({(0, 0): as_dq(c)})

    @staticmethod
    def linear(var: str, root) -> "BiPoly":
        """The linear motion-polynomial building block var - root."""
        key = (1, 0) if var == "t" else (0, 1)
        return BiPoly({key: DQ_ONE, (0, 0): -as_dq(root)})

    def coeff(self, i: int, j: int) -> DualQuaternion:
        return self.coeffs.get((i, j), as_dq(0))

    def bidegree(self):
        if not self.coeffs:
            return (-1, -1)
        return (max(i for i, _ in self.coeffs), max(j for _, j in self.coeffs))

    def is_zero(self, tol=None) -> bool:
        return all(c.is_zero(tol) for c in self.coeffs.values())

    def __add__(self, other):
        other = _as_bipoly(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, as_dq(0)) + c
        return BiPoly(out)

    def __sub__(self, other):
        return self + (-_as_bipoly(other))

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        other = _as_bipoly(other)
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                term = c1 * c2
                out[k] = out.get(k, as_dq(0)) + term
        return BiPoly(out)

    def __rmul__(self, other):
        return _as_bipoly(other) * self

    def scale(self, x) -> "BiPoly":
        return BiPoly({k: c.scale(x) for k, c in self.coeffs.items()})

    def conj(self) -> "BiPoly":
        return BiPoly({k: c.conj() for k, c in self.coeffs.items()})

    def equal(self, other, tol=None) -> bool:
        return (self - other).is_zero(tol)

    def is_real(self, tol=None) -> bool:
        """True iff every coefficient has zero vector part and zero dual part."""
        for c in self.coeffs.values():
            if not c.primal.vector_part().is_zero(tol):
                return False
            if not c.dual.is_zero(tol):
                return False
        return True

    def leading_in(self, var: str) -> "BiPoly":
        """Coefficient (a polynomial in the other variable) of the top power."""
        if not self.coeffs:
            return BiPoly()
        idx = 0 if var == "t" else 1
        d = max(k[idx] for k in self.coeffs)
        out = {}
        for (i, j), c in self.coeffs.items():
            if (i if idx == 0 else j) == d:
                out[(0, j) if idx == 0 else (i, 0)] = c
        return BiPoly(out)

    def eval_var(self, var: str, value) -> "BiPoly":
        """Substitute one variable by a real value (or INF), keep the other."""
        if is_inf(value):
            return self.leading_in(var)
        idx = 0 if var == "t" else 1
        out = {}
        for (i, j), c in self.coeffs.items():
            p = (i if idx == 0 else j)
            rest = (0, j) if idx == 0 else (i, 0)
            term = c.scale(value ** p) if p else c
            out[rest] = out.get(rest, as_dq(0)) + term
        return BiPoly(out)

    def to_json(self):
        items = sorted(self.coeffs.items())
        return {"vars": ["t", "s"],
                "coeffs": [{"i": i, "j": j, "dq": c.to_json()}
                           for (i, j), c in items]}

    @staticmethod
    def from_json(data, exact: bool = True) -> "BiPoly":
        out = {}
        for entry in data["coeffs"]:
            out[(entry["i"], entry["j"])] = DualQuaternion.from_json(
                entry["dq"], exact)
        return BiPoly(out)

    def __repr__(self):
        return f"BiPoly({sorted(self.coeffs.items())})"


def _as_bipoly(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, UniPoly):
        return x.as_bipoly()
    return BiPoly.constant(x)


class UniPoly:
    """Univariate polynomial over dual quaternions, tagged 't' or 's'."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs):
        if var not in ("t", "s"):
            raise ValueError("indeterminate tag must be 't' or 's'")
        self.var = var
        cs = [as_dq(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    @staticmethod
    def linear(var: str, root) -> "UniPoly":
        return UniPoly(var, [-as_dq(root), DQ_ONE])

    @staticmethod
    def real(var: str, reals) -> "UniPoly":
        return UniPoly(var, [as_dq(r) for r in reals])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> DualQuaternion:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return as_dq(0)

    def is_zero(self, tol=None) -> bool:
        return all(c.is_zero(tol) for c in self.coeffs)

    def as_bipoly(self) -> BiPoly:
        key = (lambda i: (i, 0)) if self.var == "t" else (lambda i: (0, i))
        return BiPoly({key(i): c for i, c in enumerate(self.coeffs)})

    def __mul__(self, other):
        if isinstance(other, UniPoly) and other.var == self.var:
            out = [as_dq(0)] * (len(self.coeffs) + len(other.coeffs))
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(self.var, out)
        return self.as_bipoly() * _as_bipoly(other)

    def __add__(self, other):
        if isinstance(other, UniPoly) and other.var == self.var:
            n = max(len(self.coeffs), len(other.coeffs))
            return UniPoly(self.var,
                           [self.coeff(i) + other.coeff(i) for i in range(n)])
        return self.as_bipoly() + _as_bipoly(other)

    def __sub__(self, other):
        if isinstance(other, UniPoly) and other.var == self.var:
            n = max(len(self.coeffs), len(other.coeffs))
            return UniPoly(self.var,
                           [self.coeff(i) - other.coeff(i) for i in range(n)])
        return self.as_bipoly() - _as_bipoly(other)

    def __neg__(self):
        return UniPoly(self.var, [-c for c in self.coeffs])

    def conj(self) -> "UniPoly":
        return UniPoly(self.var, [c.conj() for c in self.coeffs])

    def eval(self, value) -> DualQuaternion:
        if is_inf(value):
            return self.coeffs[-1] if self.coeffs else as_dq(0)
        acc = as_dq(0)
        for c in reversed(self.coeffs):
            acc = acc.scale(value) + c if not acc.is_zero() else c
        return acc

    def equal(self, other, tol=None) -> bool:
        return (self - other).is_zero(tol)

    def __repr__(self):
        return f"UniPoly({self.var!r}, {self.coeffs})"


@dataclass(frozen=True)
class MobiusMap:
    """Fractional-linear reparametrization tau -> (a*tau + b) / (c*tau + d)."""

    a: object
    b: object
    c: object
    d: object

    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, tau):
        if is_inf(tau):
            if near_zero(self.c):
                return INF
            num, den = self.a, self.c
        else:
            num = self.a * tau + self.b
            den = self.c * tau + self.d
            if near_zero(den):
                return INF
        if isinstance(den, int):
            den = Fraction(den)
        return num / den


def pmul(*factors) -> BiPoly:
    """Product of polynomials/factors in the given left-to-right order."""
    acc = BiPoly.constant(DQ_ONE)
    for f in factors:
        acc = acc * _as_bipoly(f)
    return acc


def pnorm(c) -> BiPoly:
    """C * conj(C); real for motion polynomials."""
    c = _as_bipoly(c)
    return c * c.conj()


def is_motion_polynomial(c, tol=None) -> bool:
    """Definition test: norm real (as a polynomial) and nonzero."""
    n = pnorm(c)
    return n.is_real(tol) and not n.is_zero(tol)


def peval(c, s=INF, t=INF) -> DualQuaternion:
    """Evaluate a bivariate polynomial at (s, t) with INF meaning infinity."""
    c = _as_bipoly(c)
    if is_inf(t) and is_inf(s):
        dt, ds = c.bidegree()
        return c.coeff(dt, ds)
    partial = c.eval_var("t", INF if is_inf(t) else t)
    final = partial.eval_var("s", INF if is_inf(s) else s)
    return final.coeff(0, 0)


def reparametrize(c: UniPoly, mu: MobiusMap) -> UniPoly:
    """Substitute the Moebius map and multiply away denominators."""
    if mu.det() == 0:
        raise SingularMap("ad - bc = 0")
    d = c.degree()
    if d < 0:
        return UniPoly(c.var, [])
    num = UniPoly.real(c.var, [mu.b, mu.a])
    den = UniPoly.real(c.var, [mu.d, mu.c])
    out = UniPoly(c.var, [])
    for i, ci in enumerate(c.coeffs):
        term = UniPoly(c.var, [ci])
        for _ in range(i):
            term = term * num
        for _ in range(d - i):
            term = term * den
        out = out + term
    return out


def divrem_by_real(c, m: UniPoly):
    """Division with remainder of C by a real univariate polynomial M in t.

    Returns (T, R) with C = T*M + R and deg_t(R) < deg_t(M).  M is central,
    so the quotient and remainder are two-sided and unique.
    """
    if m.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    if m.var != "t":
        raise ValueError("divisor must be univariate in t")
    for mc in m.coeffs:
        if not mc.primal.vector_part().is_zero() or not mc.dual.is_zero():
            raise ValueError("divisor must be real")
    lead_w = m.coeffs[-1].primal.w
    if isinstance(lead_w, int):
        lead_w = Fraction(lead_w)
    dm = m.degree()
    rem = _as_bipoly(c)
    quo = BiPoly()
    while True:
        dt, _ = rem.bidegree()
        if dt < dm:
            break
        # Top t-slice of the remainder, shifted down by deg(M).
        slice_terms = {}
        for (i, j), coeff in rem.coeffs.items():
            if i == dt:
                slice_terms[(dt - dm, j)] = coeff.scale(1 / lead_w)
        step = BiPoly(slice_terms)
        quo = quo + step
        rem = rem - step * m.as_bipoly()
        # The top t-slice cancels by construction; drop float residue so the
        # degree strictly decreases.
        rem = BiPoly({k: v for k, v in rem.coeffs.items() if k[0] < dt})
    return quo, rem
