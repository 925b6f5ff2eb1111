"""Construction and verification of alternating factorizations.

The engine produces bivariate polynomials of bidegree (2, 2) that factor as

    (t - h)(s - l)(t - m)(s - n) = (s - n')(t - m')(s - l')(t - h')

from three input quaternions h, m, n.  The special middle coefficient l is
the unique solution of a quaternionic linear equation; the primed
coefficients come from Bennett flips of the two univariate sub-products.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dualquat import DualQuaternion, Quaternion, as_dq
from .errors import (FlipSingular, GenericityViolated, HypothesisViolated,
                     NoUniqueSolution, NotInvertible)
from .linsolve import solve_exact
from .qpoly import BiPoly, UniPoly, pmul, pnorm


@dataclass(frozen=True)
class FactorTuple:
    """Ordered linear factors as (indeterminate tag, coefficient) pairs."""

    factors: tuple

    @staticmethod
    def of(*pairs) -> "FactorTuple":
        return FactorTuple(tuple((var, as_dq(c)) for var, c in pairs))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def linear_polys(self):
        return [UniPoly.linear(var, c) for var, c in self.factors]

    def product(self) -> BiPoly:
        return pmul(*self.linear_polys())

    def partial_products(self):
        """Prefix products: [1, f1, f1*f2, f1*f2*f3] (length = #factors)."""
        out = [BiPoly.constant(1)]
        acc = BiPoly.constant(1)
        for poly in self.linear_polys()[:-1]:
            acc = acc * poly
            out.append(acc)
        return out

    def to_json(self):
        return [{"var": var, "dq": c.to_json()} for var, c in self.factors]


@dataclass(frozen=True)
class AltFactorizationPair:
    """A t-first and an s-first factorization of the same product."""

    left: FactorTuple
    right: FactorTuple
    product: BiPoly

    @property
    def h(self): return self.left[0][1]

    @property
    def ell(self): return self.left[1][1]

    @property
    def m(self): return self.left[2][1]

    @property
    def n(self): return self.left[3][1]

    @property
    def n_prime(self): return self.right[0][1]

    @property
    def m_prime(self): return self.right[1][1]

    @property
    def ell_prime(self): return self.right[2][1]

    @property
    def h_prime(self): return self.right[3][1]

    def coefficients(self):
        """The mechanism 8-tuple in loop order h, l, m, n, n', m', l', h'."""
        return (self.h, self.ell, self.m, self.n,
                self.n_prime, self.m_prime, self.ell_prime, self.h_prime)

    def to_json(self):
        return {"left": self.left.to_json(),
                "right": self.right.to_json(),
                "product": self.product.to_json()}


def bennett_flip(h1, h2):
    """Second factorization (u-k1)(u-k2) of (u-h1)(u-h2), swapping norms.

    Works for quaternions and dual quaternions alike.
    """
    a = as_dq(h1)
    b = as_dq(h2)
    denom = a.conj() - b
    if denom.primal.is_zero():
        raise FlipSingular("conj(h1) - h2 has zero primal part")
    k2 = -(denom.inverse() * (a * b - a.norm()))
    k1 = a + b - k2
    return _demote(k1, h1, h2), _demote(k2, h1, h2)


def _demote(value: DualQuaternion, *likes):
    """Return a plain Quaternion when all inputs were plain quaternions."""
    if all(isinstance(x, Quaternion) for x in likes) and value.dual.is_zero():
        return value.primal
    return value


def _mul_matrix_columns(f):
    """4x4 real matrix of a linear map on quaternions, by columns."""
    basis = [Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1),
             Quaternion(0, 0, 0, 1)]
    cols = [f(e).coeffs() for e in basis]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def solve_quat_linear(a: Quaternion, b: Quaternion, c: Quaternion) -> Quaternion:
    """Unique quaternion x with x*b - a*x = c, via a 4x4 real linear system.

    Unique solvability requires Scal(-a) != -Scal(b), or equal scalar parts
    with different norms.
    """
    if -a.scalar_part() == -b.scalar_part() and a.norm() == b.norm():
        raise NoUniqueSolution(
            "Scal(-a) = -Scal(b) and N(-a) = N(b): no unique solution")
    matrix = _mul_matrix_columns(lambda e: e * b - a * e)
    try:
        sol = solve_exact(matrix, list(c.coeffs()))
    except Exception as exc:
        raise NoUniqueSolution(str(exc)) from exc
    if not sol.unique:
        raise NoUniqueSolution("coefficient matrix is singular")
    return Quaternion(*sol.particular)


def _check_hypothesis(h: Quaternion, m: Quaternion):
    if h.is_zero():
        raise HypothesisViolated("h = 0: the explicit solution formula needs h invertible")
    if h.scalar_part() == m.scalar_part() and h.norm() == m.norm():
        raise HypothesisViolated(
            "Scal(h) = Scal(m) and N(h) = N(m): no unique middle factor")


def construct_ell(h: Quaternion, m: Quaternion, n: Quaternion) -> Quaternion:
    """Closed-form middle coefficient l with l*(r1+h) - h*l = r1*conj(n).

    r1 = conj(h) - m.  Independent from solve_quat_linear on purpose; the two
    paths cross-check each other in the test suite.
    """
    _check_hypothesis(h, m)
    r1 = h.conj() - m
    two_scal = 2 * (2 * h.scalar_part() - m.scalar_part())
    hr = h + r1
    try:
        lhs = (Quaternion(two_scal) - h - hr * hr.conj() * h.inverse()).inverse()
        rhs = r1 * n.conj() - h.inverse() * r1 * n.conj() * hr.conj()
    except NotInvertible as exc:
        raise HypothesisViolated(str(exc)) from exc
    return lhs * rhs


def alt_factorize(h: Quaternion, m: Quaternion, n: Quaternion) -> AltFactorizationPair:
    """Build both alternating factorizations from the three seed quaternions.

    Raises HypothesisViolated when the scalar/norm hypothesis fails and
    GenericityViolated when a commutation condition would make the second
    factorization non-alternating.
    """
    _check_hypothesis(h, m)
    if m * n == n * m:
        raise GenericityViolated("m and n commute")
    m_prime, h_prime = bennett_flip(h, m)
    if h_prime * n == n * h_prime:
        raise GenericityViolated("h' and n commute")
    ell = construct_ell(h, m, n)
    n_prime, ell_prime = bennett_flip(ell, n)
    left = FactorTuple.of(("t", h), ("s", ell), ("t", m), ("s", n))
    right = FactorTuple.of(("s", n_prime), ("t", m_prime),
                           ("s", ell_prime), ("t", h_prime))
    return AltFactorizationPair(left=left, right=right, product=left.product())


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float = 0.0


@dataclass
class Report:
    """Named pass/fail outcomes with residual magnitudes."""

    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, residual: float = 0.0):
        self.checks.append(CheckResult(name, bool(passed), float(residual)))

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self):
        return [{"check": c.name, "passed": c.passed, "residual": c.residual}
                for c in self.checks]


def _poly_residual(p: BiPoly) -> float:
    return max((max(abs(float(x)) for x in c.coeffs())
                for c in p.coeffs.values()), default=0.0)


def verify_alternating(pair: AltFactorizationPair, tol=None) -> Report:
    """Check product equality, norm pairing, the univariate sub-product
    identities and the motion-polynomial condition on every factor."""
    report = Report()

    lp = pair.left.product()
    rp = pair.right.product()
    diff = lp - rp
    report.add("product_equality", diff.is_zero(tol), _poly_residual(diff))
    stored = lp - pair.product
    report.add("product_matches_stored", stored.is_zero(tol),
               _poly_residual(stored))

    for name, x, y in (("t_h", pair.h, pair.h_prime),
                       ("t_m", pair.m, pair.m_prime),
                       ("s_l", pair.ell, pair.ell_prime),
                       ("s_n", pair.n, pair.n_prime)):
        var = name[0]
        d = pnorm(UniPoly.linear(var, x)) - pnorm(UniPoly.linear(var, y))
        report.add(f"norm_pairing_{name}", d.is_zero(tol), _poly_residual(d))

    s_left = pmul(UniPoly.linear("s", pair.ell), UniPoly.linear("s", pair.n))
    s_right = pmul(UniPoly.linear("s", pair.n_prime),
                   UniPoly.linear("s", pair.ell_prime))
    d = s_left - s_right
    report.add("sub_product_s", d.is_zero(tol), _poly_residual(d))

    t_left = pmul(UniPoly.linear("t", pair.h), UniPoly.linear("t", pair.m))
    t_right = pmul(UniPoly.linear("t", pair.m_prime),
                   UniPoly.linear("t", pair.h_prime))
    d = t_left - t_right
    report.add("sub_product_t", d.is_zero(tol), _poly_residual(d))

    for label, (var, coeff) in zip(
            ("h", "l", "m", "n", "np", "mp", "lp", "hp"),
            list(pair.left) + list(pair.right)):
        poly = UniPoly.linear(var, coeff)
        norm = pnorm(poly)
        ok = norm.is_real(tol) and not norm.is_zero(tol)
        res = 0.0
        for c in norm.coeffs.values():
            res = max(res, max(abs(float(x)) for x in
                               c.primal.vector_part().coeffs() + c.dual.coeffs()))
        report.add(f"motion_polynomial_{label}", ok, res)

    return report
