"""Alternating factorization construction and verification."""

import random
from fractions import Fraction

import pytest

from bennett8r.dualquat import DualQuaternion, Quaternion, as_dq, quat
from bennett8r.errors import (FlipSingular, GenericityViolated,
                              HypothesisViolated)
from bennett8r.factor import (FactorTuple, alt_factorize, bennett_flip,
                              construct_ell, solve_quat_linear,
                              verify_alternating)
from bennett8r.qpoly import INF, UniPoly, peval, pmul, pnorm

from conftest import (ELL_EXPECT, H_P, HP_EXPECT, LP_EXPECT, M_P, MP_EXPECT,
                      N_P, NP_EXPECT, random_admissible_triple, random_quat)


def test_worked_example_exact():
    pair = alt_factorize(H_P, M_P, N_P)
    assert pair.ell.primal == ELL_EXPECT
    assert pair.n_prime.primal == NP_EXPECT
    assert pair.m_prime.primal == MP_EXPECT
    assert pair.ell_prime.primal == LP_EXPECT
    assert pair.h_prime.primal == HP_EXPECT
    assert all(c.dual.is_zero() for c in pair.coefficients())
    report = verify_alternating(pair)
    assert report.all_passed


def test_bennett_flip_swaps_norms_and_multiplies_back():
    rng = random.Random(5)
    for _ in range(20):
        h1 = random_quat(rng)
        h2 = random_quat(rng)
        if (h1.conj() - h2).is_zero():
            continue
        k1, k2 = bennett_flip(h1, h2)
        lhs = pmul(UniPoly.linear("t", h1), UniPoly.linear("t", h2))
        rhs = pmul(UniPoly.linear("t", k1), UniPoly.linear("t", k2))
        assert (lhs - rhs).is_zero()
        assert (pnorm(UniPoly.linear("t", k1))
                - pnorm(UniPoly.linear("t", h2))).is_zero()
        assert (pnorm(UniPoly.linear("t", k2))
                - pnorm(UniPoly.linear("t", h1))).is_zero()


def test_bennett_flip_is_an_involution():
    rng = random.Random(6)
    for _ in range(20):
        h1 = random_quat(rng)
        h2 = random_quat(rng)
        if (h1.conj() - h2).is_zero():
            continue
        k1, k2 = bennett_flip(h1, h2)
        if (k1.conj() - k2).is_zero():
            continue
        back = bennett_flip(k1, k2)
        assert back == (h1, h2)


def test_bennett_flip_singular():
    h1 = quat(1, 2, 3, 4)
    with pytest.raises(FlipSingular):
        bennett_flip(h1, h1.conj())


def test_bennett_flip_keeps_plain_quaternions_plain():
    k1, k2 = bennett_flip(quat(0, 1, 0, 0), quat(0, 0, 2, 0))
    assert isinstance(k1, Quaternion) and isinstance(k2, Quaternion)
    d1, d2 = bennett_flip(DualQuaternion(quat(0, 1, 0, 0)),
                          quat(0, 0, 2, 0))
    assert isinstance(d1, DualQuaternion)


def test_solve_quat_linear_and_closed_form_agree(rng):
    for _ in range(25):
        h, m, n = random_admissible_triple(rng)
        r1 = h.conj() - m
        ell = construct_ell(h, m, n)
        # The middle coefficient solves x*(r1 + h) - h*x = r1*conj(n).
        assert ell * (r1 + h) - h * ell == r1 * n.conj()
        via_system = solve_quat_linear(h, r1 + h, r1 * n.conj())
        assert via_system == ell


def test_hypothesis_violations():
    with pytest.raises(HypothesisViolated):
        construct_ell(quat(0, 0, 0, 0), quat(1, 2, 3, 4), quat(1))
    # Same scalar part and same norm.
    with pytest.raises(HypothesisViolated):
        construct_ell(quat(1, 2, 0, 0), quat(1, 0, 2, 0), quat(1))
    with pytest.raises(HypothesisViolated):
        alt_factorize(quat(1, 2, 0, 0), quat(1, 0, 2, 0), quat(0, 1, 1, 1))


def test_genericity_violations():
    h, m = H_P, M_P
    with pytest.raises(GenericityViolated):
        alt_factorize(h, m, quat(7))          # real n commutes with m
    with pytest.raises(GenericityViolated):
        alt_factorize(h, m, m)                # n = m commutes with m


def test_random_factorizations_verify_exactly(rng):
    for _ in range(30):
        h, m, n = random_admissible_triple(rng)
        pair = alt_factorize(h, m, n)
        report = verify_alternating(pair)
        assert report.all_passed, [c.name for c in report.checks
                                   if not c.passed]


def test_factorizations_agree_pointwise(rng):
    h, m, n = random_admissible_triple(rng)
    pair = alt_factorize(h, m, n)
    left = pair.left.product()
    right = pair.right.product()
    points = [(Fraction(rng.randint(-8, 8)), Fraction(rng.randint(-8, 8)))
              for _ in range(25)]
    points += [(INF, Fraction(2)), (Fraction(2), INF), (INF, INF)]
    for s0, t0 in points:
        assert peval(left, s=s0, t=t0) == peval(right, s=s0, t=t0)


def test_product_is_motion_polynomial(rng):
    h, m, n = random_admissible_triple(rng)
    pair = alt_factorize(h, m, n)
    norm = pnorm(pair.product)
    assert norm.is_real() and not norm.is_zero()
    assert pair.product.bidegree() == (2, 2)


def test_partial_products():
    pair = alt_factorize(H_P, M_P, N_P)
    partials = pair.left.partial_products()
    assert len(partials) == 4
    assert (partials[0] - as_dq(1)).is_zero()
    full = partials[3] * UniPoly.linear("s", pair.n).as_bipoly()
    assert (full - pair.product).is_zero()


def test_report_lookup_and_json():
    pair = alt_factorize(H_P, M_P, N_P)
    report = verify_alternating(pair)
    assert report["product_equality"].passed
    with pytest.raises(KeyError):
        report["nonexistent"]
    data = report.to_json()
    assert {"check", "passed", "residual"} <= set(data[0])


def test_factor_tuple_json():
    ft = FactorTuple.of(("t", H_P), ("s", quat(1)))
    data = ft.to_json()
    assert data[0]["var"] == "t"
    assert data[0]["dq"] == [0, 2, -1, -3, 0, 0, 0, 0]
