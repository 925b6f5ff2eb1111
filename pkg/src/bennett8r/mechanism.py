"""Multi-Bennett 8R mechanism: axis poses, DH data, alignment, ratios.

A mechanism is the ordered 8-tuple of dual quaternions behind the two
alternating factorizations.  The joint loop follows the two open 4R chains
joined at both ends: H, L, M, N, H', L', M', N'.  Even positions of the loop
rotate with parameter t, odd ones with s; fixing one parameter leaves a
mobile Bennett 4R sub-loop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dualquat import (DualQuaternion, PluckerLine, Quaternion, as_dq,
                       dq_proportional)
from .errors import (AllParallel, DegenerateAxis, DegenerateConfiguration,
                     GenericityViolated, ZeroDistance)
from .factor import AltFactorizationPair, FactorTuple
from .lines import (common_normal, direction_cosine, line_line_distance,
                    line_to_arrays)
from .qpoly import INF, BiPoly, is_inf, peval
from .dualquat import act_on_line
from .scalars import EPS_TOL

AXIS_NAMES = ("H", "L", "M", "N", "Np", "Mp", "Lp", "Hp")

#: Joint order around the closed 8R loop.
LOOP_ORDER = ("H", "L", "M", "N", "Hp", "Lp", "Mp", "Np")


@dataclass(frozen=True)
class ConfigPoint:
    """Point (s, t) of the torus-shaped configuration component."""

    s: object
    t: object

    def __repr__(self):
        return f"ConfigPoint(s={self.s!r}, t={self.t!r})"


@dataclass(frozen=True)
class AxisFrame:
    """The eight axis lines at one configuration point."""

    point: ConfigPoint
    H: PluckerLine
    L: PluckerLine
    M: PluckerLine
    N: PluckerLine
    Np: PluckerLine
    Mp: PluckerLine
    Lp: PluckerLine
    Hp: PluckerLine

    def axis(self, name: str) -> PluckerLine:
        return getattr(self, name)

    def loop(self):
        return [self.axis(n) for n in LOOP_ORDER]

    def all_axes(self):
        return [self.axis(n) for n in AXIS_NAMES]


@dataclass(frozen=True)
class CanonicalParams:
    """Axis data of the canonical mechanism construction.

    The first normal-foot coordinate of the second t-axis is tied to the
    others (m1 = h1*h3*m2/(h2*m3)); the s-seed quaternion has zero i-part.
    """

    h1: object
    h2: object
    h3: object
    m2: object
    m3: object
    n0: object
    n2: object
    n3: object
    mu: object
    nu: object

    def __post_init__(self):
        for name in ("h2", "m3", "nu"):
            if getattr(self, name) == 0:
                raise GenericityViolated(name)
        if self.h2 * self.m3 + self.h3 * self.m2 == 0:
            raise GenericityViolated("h2*m3 + h3*m2")
        if self.delta() == 0:
            raise GenericityViolated("Delta")
        if self.psi() == 0:
            raise GenericityViolated("Psi")

    @property
    def m1(self):
        return _div(self.h1 * self.h3 * self.m2, self.h2 * self.m3)

    def delta(self):
        h2, h3, m2, m3, n2, n3 = (self.h2, self.h3, self.m2, self.m3,
                                  self.n2, self.n3)
        return h2 * m3 * ((h3 * m2 - h2 * m3) * (n2 * n2 - n3 * n3)
                          + 2 * (h2 * m2 + h3 * m3) * n2 * n3)

    def psi(self):
        h2, h3, m2, m3, n2, n3 = (self.h2, self.h3, self.m2, self.m3,
                                  self.n2, self.n3)
        return (4 * h2 * h2 * m2 * n3 * (m2 * n3 - m3 * n2)
                + (h2 * h2 * m3 * m3 + h3 * h3 * m2 * m2) * (n2 * n2 + n3 * n3)
                + 2 * h2 * h3 * m2 * (2 * m2 * n2 * n3
                                      - m3 * (n2 * n2 - n3 * n3)))

    def scalars(self):
        return (self.h1, self.h2, self.h3, self.m2, self.m3,
                self.n0, self.n2, self.n3, self.mu, self.nu)

    def to_json(self):
        from .scalars import scalar_to_json
        keys = ("h1", "h2", "h3", "m2", "m3", "n0", "n2", "n3", "mu", "nu")
        return {k: scalar_to_json(getattr(self, k)) for k in keys}


def _div(a, b):
    if isinstance(a, int):
        a = Fraction(a)
    return a / b


@dataclass(frozen=True)
class MechanismSpec:
    """The 8-tuple (h, l, m, n, n', m', l', h') plus the motion polynomial."""

    pair: AltFactorizationPair
    canonical: CanonicalParams | None = None

    @staticmethod
    def from_pair(pair: AltFactorizationPair,
                  canonical: CanonicalParams | None = None) -> "MechanismSpec":
        return MechanismSpec(pair=pair, canonical=canonical)

    @property
    def product(self) -> BiPoly:
        return self.pair.product

    def coefficient(self, axis: str) -> DualQuaternion:
        idx = {"H": 0, "L": 1, "M": 2, "N": 3,
               "Np": 4, "Mp": 5, "Lp": 6, "Hp": 7}[axis]
        return self.pair.coefficients()[idx]

    def to_json(self):
        out = {"spec": {key: self.coefficient(axis).to_json()
                        for key, axis in (("h", "H"), ("l", "L"), ("m", "M"),
                                          ("n", "N"), ("np", "Np"),
                                          ("mp", "Mp"), ("lp", "Lp"),
                                          ("hp", "Hp"))}}
        if self.canonical is not None:
            out["canonical_params"] = self.canonical.to_json()
        return out


def _vect_line(coef: DualQuaternion) -> PluckerLine:
    """Rotation axis of the factor t - coef in classical Plücker coordinates.

    The vector part of a rotation factor encodes its axis with negated
    moment, so the dual sign is flipped here.
    """
    v = coef.vector_part().eps_conj()
    line = PluckerLine(v)
    if all(c == 0 for c in line.direction()):
        raise DegenerateAxis("factor coefficient has zero direction part")
    return line


def zero_config_axes(spec: MechanismSpec) -> AxisFrame:
    """Axes at (s, t) = (inf, inf): just the factor vector parts."""
    lines = [_vect_line(c) for c in spec.pair.coefficients()]
    return AxisFrame(ConfigPoint(INF, INF), *lines)


def axis_pose(spec: MechanismSpec, point: ConfigPoint) -> AxisFrame:
    """Axes at a general (s, t), via the partial products of both chains."""
    left_partials = spec.pair.left.partial_products()
    right_partials = spec.pair.right.partial_products()
    coeffs = spec.pair.coefficients()
    lines = {}
    # Left chain: H, L, M, N; right chain: N', M', L', H'.
    for name, partial, coef in zip(
            ("H", "L", "M", "N"), left_partials, coeffs[:4]):
        lines[name] = _posed_line(partial, coef, point)
    for name, partial, coef in zip(
            ("Np", "Mp", "Lp", "Hp"), right_partials, coeffs[4:]):
        lines[name] = _posed_line(partial, coef, point)
    return AxisFrame(point, **lines)


def _posed_line(partial: BiPoly, coef: DualQuaternion,
                point: ConfigPoint) -> PluckerLine:
    g = peval(partial, point.s, point.t)
    if g.norm().a == 0 or (not isinstance(g.norm().a, (int, Fraction))
                           and abs(g.norm().a) < 1e-300):
        raise DegenerateConfiguration(
            f"partial product norm vanishes at {point}")
    return act_on_line(g, _vect_line(coef))


# --- canonical construction -------------------------------------------------

def build_canonical(params: CanonicalParams) -> MechanismSpec:
    """Mechanism from the closed-form canonical axis data.

    The t-side coefficients combine the scalar mu with scaled axis vectors;
    the s-side primal parts and dual parts are closed forms in
    the eight canonical parameters.
    """
    h1, h2, h3, m2, m3, n0, n2, n3, mu, nu = params.scalars()
    m1 = params.m1

    vect_h = DualQuaternion(Quaternion(0, 0, h2, h3),
                            Quaternion(0, 0, -h1 * h3, h1 * h2))
    vect_m = DualQuaternion(Quaternion(0, 0, m2, m3),
                            Quaternion(0, 0, -m1 * m3, m1 * m2))
    vect_hp = DualQuaternion(Quaternion(0, 0, -h2, h3),
                             Quaternion(0, 0, h1 * h3, h1 * h2))
    vect_mp = DualQuaternion(Quaternion(0, 0, -m2, m3),
                             Quaternion(0, 0, m1 * m3, m1 * m2))

    lam = -_div(nu * m2, h2)
    h = as_dq(mu) + vect_h.scale(lam)
    m = as_dq(mu) + vect_m.scale(nu)
    hp = as_dq(mu) + vect_hp.scale(lam)
    mp = as_dq(mu) + vect_mp.scale(nu)

    denom = h2 * m3 + h3 * m2
    ell_w = n0
    ell_y = _div(h2 * (m3 * n2 - 2 * m2 * n3) - h3 * m2 * n2, denom)
    ell_p = Quaternion(ell_w, 0, ell_y, -n3)
    ellp_p = Quaternion(ell_w, 0, ell_y, n3)
    n_p = Quaternion(n0, 0, n2, n3)
    np_p = Quaternion(n0, 0, n2, -n3)

    delta = params.delta()
    big_b = h2 * m2 * n3 - h2 * m3 * n2 + h3 * m2 * n2 + h3 * m3 * n3
    big_a = 2 * h2 * m2 * n3 - h2 * m3 * n2 + h3 * m2 * n2

    ell_d = Quaternion(
        0, 0,
        _div(h1 * n2 * n3 * (h2 * m3 + h3 * m2) * big_b, delta),
        _div(-h1 * n2 * big_b * big_a, delta))
    ellp_d = Quaternion(
        0, 0,
        _div(h1 * n2 * n3 * (h2 * m3 + h3 * m2) * big_b, delta),
        _div(h1 * n2 * big_b * big_a, delta))
    n_d = Quaternion(
        0, 0,
        _div(-h1 * n3 * big_a * big_b, delta),
        _div(h1 * n2 * big_a * big_b, delta))
    np_d = Quaternion(
        0, 0,
        _div(-h1 * n3 * big_a * big_b, delta),
        _div(-h1 * n2 * big_a * big_b, delta))

    ell = DualQuaternion(ell_p, ell_d)
    n = DualQuaternion(n_p, n_d)
    ellp = DualQuaternion(ellp_p, ellp_d)
    np_ = DualQuaternion(np_p, np_d)

    left = FactorTuple.of(("t", h), ("s", ell), ("t", m), ("s", n))
    right = FactorTuple.of(("s", np_), ("t", mp), ("s", ellp), ("t", hp))
    pair = AltFactorizationPair(left=left, right=right, product=left.product())
    return MechanismSpec(pair=pair, canonical=params)


# --- DH parameters ----------------------------------------------------------

@dataclass
class DHTable:
    """Distances/angles per consecutive loop pair and offsets per joint."""

    pair_names: list
    distances: list
    angles: list
    offsets: list

    def to_json(self):
        return {"pairs": list(self.pair_names),
                "distances": list(self.distances),
                "angles": list(self.angles),
                "offsets": list(self.offsets)}


def dh_parameters(frame: AxisFrame, tol: float = EPS_TOL) -> DHTable:
    """Measure distances, twist angles and offsets around the 8R loop."""
    lines = frame.loop()
    n = len(lines)
    normals = [common_normal(lines[i], lines[(i + 1) % n], tol)
               for i in range(n)]
    distances = [cn.distance for cn in normals]
    angles = [cn.angle for cn in normals]
    offsets = []
    import numpy as np
    for i in range(n):
        d, _ = line_to_arrays(lines[i])
        incoming = normals[(i - 1) % n].foot_b
        outgoing = normals[i].foot_a
        offsets.append(float(np.dot(outgoing - incoming, d)))
    names = [f"{LOOP_ORDER[i]}-{LOOP_ORDER[(i + 1) % n]}" for i in range(n)]
    return DHTable(pair_names=names, distances=distances, angles=angles,
                   offsets=offsets)


def dh_closed_form(params: CanonicalParams):
    """Exact distances d1..d4 and squared angle cosines of the canonical
    mechanism."""
    h1, h2, h3, m2, m3, n0, n2, n3, mu, nu = params.scalars()
    phi = params.delta()
    if phi == 0:
        raise GenericityViolated("Phi")
    psi = params.psi()
    if psi == 0:
        raise GenericityViolated("Psi")

    poly_a = (2 * h2 * h2 * m2 * n3 - h2 * h2 * m3 * n2 + h2 * h3 * m2 * n2
              + h2 * h3 * m3 * n3 + h3 * h3 * m2 * n3)
    poly_b = (2 * h2 * m2 * m2 * n3 - h2 * m2 * m3 * n2 + h2 * m3 * m3 * n3
              + h3 * m2 * m2 * n2 + h3 * m2 * m3 * n3)

    d1 = _div(h1 * (m2 * n3 - m3 * n2) * poly_a, phi)
    d2 = _div(h1 * (m2 * n3 - m3 * n2) * (h2 * n2 - h3 * n3)
              * (h2 * m3 - h3 * m2), phi)
    d3 = _div(h1 * (m2 * n2 + m3 * n3) * (h2 * n3 + h3 * n2)
              * (h2 * m3 - h3 * m2), phi)
    d4 = _div(h1 * (h2 * n3 + h3 * n2) * poly_b, phi)

    nn = n2 * n2 + n3 * n3
    mm = m2 * m2 + m3 * m3
    hh = h2 * h2 + h3 * h3
    cos1 = _div((m2 * n2 + m3 * n3) ** 2, nn * mm)
    cos2 = _div(poly_b ** 2, mm * psi)
    cos3 = _div(poly_a ** 2, hh * psi)
    cos4 = _div((h2 * n2 - h3 * n3) ** 2, hh * nn)
    return (d1, d2, d3, d4), (cos1, cos2, cos3, cos4)


# --- alignment --------------------------------------------------------------

def alignment_residual(lines, tol: float = EPS_TOL) -> float:
    """How far the lines are from sharing a common perpendicular.

    Seeds a candidate normal from the first sufficiently non-parallel pair,
    then returns the worst intersection/orthogonality defect over all lines.
    """
    seed = None
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if 1.0 - direction_cosine(lines[i], lines[j]) > 1e-6:
                seed = (i, j)
                break
        if seed:
            break
    if seed is None:
        raise AllParallel("no non-parallel axis pair to seed the normal")
    candidate = common_normal(lines[seed[0]], lines[seed[1]], tol).line
    worst = 0.0
    for line in lines:
        worst = max(worst, line_line_distance(line, candidate, tol))
        worst = max(worst, direction_cosine(line, candidate))
    return worst


def check_alignment(frame: AxisFrame, tol: float = EPS_TOL) -> bool:
    """True iff all eight axes meet one line orthogonally within tol."""
    try:
        return alignment_residual(frame.all_axes(), tol) <= tol
    except AllParallel:
        raise


def aligned_configs(spec: MechanismSpec, search_range=(-30.0, 30.0),
                    samples: int = 600, tol: float = EPS_TOL):
    """The four aligned configuration points.

    Canonical specs use the closed-form grid {inf, n0} x {inf, mu} in (s, t);
    other specs fall back to a numeric alignment search per parameter family.
    """
    if spec.canonical is not None:
        n0 = spec.canonical.n0
        mu = spec.canonical.mu
        return [ConfigPoint(INF, INF), ConfigPoint(n0, INF),
                ConfigPoint(INF, mu), ConfigPoint(n0, mu)]
    s_vals = sub_aligned_params(spec, "s", search_range, samples, tol)
    t_vals = sub_aligned_params(spec, "t", search_range, samples, tol)
    return [ConfigPoint(s, t) for s in s_vals for t in t_vals]


# --- Bennett sub-mechanisms -------------------------------------------------

#: Sub-loop membership: fixing s freezes the s-joints and leaves the
#: t-driven axes H, M, H', M' mobile (the "t-Bennett at s0"), and dually.
SUB_AXES = {"t": ("H", "M", "Hp", "Mp"), "s": ("L", "N", "Lp", "Np")}


@dataclass(frozen=True)
class BennettSub:
    """Four axes of a Bennett sub-loop at a frozen parameter value."""

    kind: str                  # "t": t-Bennett at s0; "s": s-Bennett at t0
    fixed: object              # the frozen parameter value (s0 or t0)
    moving: object             # parameter value the axes were sampled at
    axes: tuple                # four PluckerLine in loop order


def bennett_sub(spec: MechanismSpec, kind: str, fixed,
                moving=Fraction(5, 7)) -> BennettSub:
    """Extract the Bennett sub-loop axes at the given parameter values."""
    if kind not in SUB_AXES:
        raise ValueError("kind must be 't' or 's'")
    point = (ConfigPoint(fixed, moving) if kind == "t"
             else ConfigPoint(moving, fixed))
    frame = axis_pose(spec, point)
    axes = tuple(frame.axis(name) for name in SUB_AXES[kind])
    return BennettSub(kind=kind, fixed=fixed, moving=moving, axes=axes)


def sub_aligned_params(spec: MechanismSpec, kind: str,
                       search_range=(-30.0, 30.0), samples: int = 600,
                       tol: float = EPS_TOL):
    """The two parameter values at which the sub-family aligns.

    Closed forms for canonical specs ((inf, mu) for the t-family, (inf, n0)
    for the s-family); a scan-and-refine residual search otherwise.
    """
    if spec.canonical is not None:
        return ((INF, spec.canonical.mu) if kind == "t"
                else (INF, spec.canonical.n0))
    return _search_aligned(spec, kind, search_range, samples, tol)


def _sub_residual(spec: MechanismSpec, kind: str, value, probe) -> float:
    """Alignment residual of the sub-loop when its moving parameter is
    `value`, with the complementary parameter frozen at `probe`."""
    sub = bennett_sub(spec, kind, probe, moving=value)
    return alignment_residual(list(sub.axes))


def _search_aligned(spec, kind, search_range, samples, tol):
    from scipy.optimize import minimize_scalar
    probe = Fraction(3, 11)
    lo, hi = search_range
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    vals = []
    for x in xs:
        try:
            vals.append(_sub_residual(spec, kind, x, probe))
        except (DegenerateConfiguration, AllParallel):
            vals.append(float("inf"))
    found = []
    if _sub_residual(spec, kind, INF, probe) <= tol:
        found.append(INF)
    for i in range(1, samples - 1):
        if vals[i] < vals[i - 1] and vals[i] <= vals[i + 1]:
            # The residual behaves like c*|x - x*| near a zero; golden-section
            # handles that kink where parabolic interpolation stalls.
            try:
                res = minimize_scalar(
                    lambda x: _sub_residual(spec, kind, x, probe),
                    bracket=(xs[i - 1], xs[i], xs[i + 1]), method="golden",
                    options={"xtol": 1e-13})
            except (ValueError, DegenerateConfiguration, AllParallel):
                res = minimize_scalar(
                    lambda x: _sub_residual(spec, kind, x, probe),
                    bounds=(xs[i - 1], xs[i + 1]), method="bounded",
                    options={"xatol": 1e-14})
            if res.fun <= tol and not any(
                    not is_inf(f) and abs(f - res.x) < 1e-6 for f in found):
                found.append(float(res.x))
    if len(found) != 2:
        raise DegenerateConfiguration(
            f"alignment search found {len(found)} value(s), expected 2")
    return tuple(found)


# --- Bennett ratios ---------------------------------------------------------

def bennett_ratio(sub: BennettSub, tol: float = EPS_TOL) -> float:
    """sin(angle)/distance over consecutive sub-loop pairs; checks that the
    four values agree within tol before returning the first."""
    ratios = consecutive_ratios(sub, tol)
    first = ratios[0]
    for r in ratios[1:]:
        if abs(r - first) > tol * max(1.0, abs(first)):
            raise ZeroDistance(
                f"inconsistent Bennett ratios: {ratios}")
    return first


def consecutive_ratios(sub: BennettSub, tol: float = EPS_TOL):
    axes = list(sub.axes)
    ratios = []
    for i in range(4):
        cn = common_normal(axes[i], axes[(i + 1) % 4], tol)
        if cn.distance <= tol:
            raise ZeroDistance("consecutive sub-loop axes intersect")
        ratios.append(cn.sin_angle / cn.distance)
    return ratios


def bennett_ratio_closed(params: CanonicalParams, s) -> float:
    """Closed form of the t-Bennett ratio as a function of s."""
    h1, h2, h3, m2, m3, n0, n2, n3, mu, nu = [float(x) for x in
                                              params.scalars()]
    s = float(s)
    hm_p = h2 * m3 + h3 * m2
    c2 = (6 * hm_p ** 2 * n0 ** 2
          + (2 * h2 ** 2 * m3 ** 2 + 2 * h3 ** 2 * m2 ** 2
             + 4 * h3 ** 2 * m3 ** 2) * n2 ** 2
          + 2 * (2 * h2 ** 2 * m2 ** 2 + h2 ** 2 * m3 ** 2
                 + h3 ** 2 * m2 ** 2) * n3 ** 2
          - 4 * n2 * n3 * (h2 * m2 - h3 * m3) * (h2 * m3 - h3 * m2))
    c1 = (-4 * n0 ** 3 * hm_p ** 2
          - 4 * n0 * n2 ** 2 * (h2 ** 2 * m3 ** 2 + h3 ** 2 * m2 ** 2
                                + 2 * h3 ** 2 * m3 ** 2)
          + 8 * n0 * n2 * n3 * (h2 * m2 - h3 * m3) * (h2 * m3 - h3 * m2)
          - 4 * n0 * n3 ** 2 * (2 * h2 ** 2 * m2 ** 2 + h2 ** 2 * m3 ** 2
                                + h3 ** 2 * m2 ** 2))
    c0 = (n0 ** 4 * hm_p ** 2
          + 2 * n0 ** 2 * n2 ** 2 * (h2 ** 2 * m3 ** 2 + h3 ** 2 * m2 ** 2
                                     + 2 * h3 ** 2 * m3 ** 2)
          + 4 * n0 ** 2 * n2 * n3 * (h2 * m2 - h3 * m3)
          * (h3 * m2 - h2 * m3)
          + 2 * n0 ** 2 * n3 ** 2 * (2 * h2 ** 2 * m2 ** 2
                                     + h2 ** 2 * m3 ** 2
                                     + h3 ** 2 * m2 ** 2)
          + n2 ** 4 * (h2 * m3 - h3 * m2) ** 2
          + 4 * n2 ** 3 * n3 * (h2 * m2 + h3 * m3) * (h3 * m2 - h2 * m3)
          + 2 * n2 ** 2 * n3 ** 2 * (2 * h2 ** 2 * m2 ** 2
                                     - h2 ** 2 * m3 ** 2
                                     + 6 * h2 * h3 * m2 * m3
                                     - h3 ** 2 * m2 ** 2
                                     + 2 * h3 ** 2 * m3 ** 2)
          + 4 * n2 * n3 ** 3 * (h2 * m2 + h3 * m3) * (h2 * m3 - h3 * m2)
          + n3 ** 4 * (h2 * m3 - h3 * m2) ** 2)
    num = h2 * m3 * (hm_p ** 2 * (s ** 4 - 4 * n0 * s ** 3)
                     + c2 * s ** 2 + c1 * s + c0)
    den = (h1 * math.sqrt(h2 ** 2 + h3 ** 2) * math.sqrt(m2 ** 2 + m3 ** 2)
           * (s ** 2 - 2 * n0 * s + n0 ** 2 + n2 ** 2 + n3 ** 2)
           * (hm_p ** 2 * (s ** 2 - 2 * n0 * s + n0 ** 2 + n3 ** 2)
              + ((h2 * m3 - h3 * m2) * n2 - 2 * h2 * m2 * n3) ** 2))
    return num / den
