"""Shared fixtures: worked-example inputs and random seed generators."""

import random
from fractions import Fraction

import pytest

from bennett8r.dualquat import DualQuaternion, Quaternion
from bennett8r.errors import Bennett8RError
from bennett8r.factor import alt_factorize
from bennett8r.mechanism import CanonicalParams


# Worked example: primal factorization seed and its known outputs.
H_P = Quaternion(0, 2, -1, -3)
M_P = Quaternion(-6, -2, 3, -3)
N_P = Quaternion(0, 0, -1, 0)
ELL_EXPECT = Quaternion(0, -1, 1, 0)
# Second factorization (s - n')(t - m')(s - l')(t - h') coefficients.
NP_EXPECT = Quaternion(0, 0, 1, 0)
MP_EXPECT = Quaternion(-6, 2, 3, -3)
LP_EXPECT = Quaternion(0, -1, -1, 0)
HP_EXPECT = Quaternion(0, -2, -1, -3)

# Dual extension of the same example.
H_DUAL = DualQuaternion(H_P, Quaternion(0, 23, -74, 40))
M_DUAL = DualQuaternion(M_P, Quaternion(0, -45, -66, -36))
ELL_D_EXPECT = Quaternion(0, -11, -11, 2)
N_D_EXPECT = Quaternion(0, -3, 0, -2)
LP_D_EXPECT = Quaternion(0, 11, -11, -2)
NP_D_EXPECT = Quaternion(0, -25, 0, 2)
MP_DUAL_EXPECT = DualQuaternion(Quaternion(-6, 2, 3, -3),
                                Quaternion(0, -21, -22, -36))
HP_DUAL_EXPECT = DualQuaternion(Quaternion(0, -2, -1, -3),
                                Quaternion(0, -1, -118, 40))

CANONICAL_STD = CanonicalParams(
    h1=Fraction(1), h2=Fraction(1), h3=Fraction(2), m2=Fraction(1),
    m3=Fraction(1), n0=Fraction(3), n2=Fraction(1), n3=Fraction(2),
    mu=Fraction(-2), nu=Fraction(1))


def random_quat(rng, lo=-9, hi=9):
    return Quaternion(*[Fraction(rng.randint(lo, hi)) for _ in range(4)])


def random_admissible_triple(rng):
    """(h, m, n) on which the alternating factorization engine succeeds."""
    while True:
        h = random_quat(rng)
        m = random_quat(rng)
        n = random_quat(rng)
        try:
            alt_factorize(h, m, n)
        except Bennett8RError:
            continue
        return h, m, n


def orthogonal_dual_part(rng, primal: Quaternion) -> Quaternion:
    """Random vectorial quaternion d with Vect(primal) . d = 0."""
    v = primal.vector_part()
    nv = v.norm()
    assert nv != 0
    raw = Quaternion(0, *[Fraction(rng.randint(-9, 9)) for _ in range(3)])
    return raw - v.scale(Fraction(v.dot(raw), 1) / nv)


def random_dual_displacement(rng, primal: Quaternion) -> DualQuaternion:
    return DualQuaternion(primal, orthogonal_dual_part(rng, primal))


def random_canonical(rng, as_float=False):
    """Random params passing every genericity guard.

    Also rejects parameter choices with a vanishing closed-form distance or a
    zero twist angle: there, consecutive axes coincide or are parallel and
    whole curves of configurations align, not just isolated points.
    """
    from bennett8r.mechanism import dh_closed_form
    while True:
        vals = [Fraction(rng.randint(-5, 5)) for _ in range(10)]
        try:
            params = CanonicalParams(*vals)
            dists, cos_sq = dh_closed_form(params)
        except Bennett8RError:
            continue
        if params.n2 == 0 or params.n3 == 0 or params.h1 == 0:
            continue
        if params.m2 == 0:  # t-axis directions collapse to zero
            continue
        if any(d == 0 for d in dists) or any(c == 1 for c in cos_sq):
            continue
        if as_float:
            return CanonicalParams(*[float(v) for v in vals])
        return params


@pytest.fixture
def rng():
    return random.Random(20240817)
