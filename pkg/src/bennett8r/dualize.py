"""Extension of a primal alternating factorization to dual quaternions.

The dual parts of the four s-coefficients are the solution of a linear
system: 32 equations from matching the dual parts of the two expanded
products, coefficient by coefficient, plus 8 motion-polynomial constraints
on the linear s-factors.  The system is assembled by probing the affine
residual map with unit vectors and solved exactly over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dualquat import DualQuaternion, Quaternion, as_dq
from .errors import HypothesisViolated
from .factor import (AltFactorizationPair, FactorTuple, alt_factorize,
                     bennett_flip)
from .linsolve import LinearSolution, residual, solve_exact
from .qpoly import UniPoly, pmul
from .scalars import scalar_to_json

#: Row keys of the 32 coefficient-matching equations: (t-power, s-power,
#: quaternion component) in lexicographic order, skipping the trivial
#: top coefficient (2, 2).
COEFF_ROW_KEYS = [(i, j, c)
                  for i in range(3) for j in range(3) if (i, j) != (2, 2)
                  for c in range(4)]

#: Unknown labels in column order.
UNKNOWN_LABELS = [f"{name}_{comp}"
                  for name in ("l_d", "n_d", "lp_d", "np_d")
                  for comp in ("w", "x", "y", "z")]


@dataclass(frozen=True)
class DualSeed:
    """Input of the dualization pipeline: dual h and m plus a primal n."""

    h: DualQuaternion
    m: DualQuaternion
    n_p: Quaternion

    def validate(self):
        for name, v in (("h", self.h), ("m", self.m)):
            if v.dual.w != 0 or v.primal.vector_part().dot(v.dual) != 0:
                raise HypothesisViolated(
                    f"t - {name} is not a motion polynomial")


@dataclass
class DualSystem:
    """The 40x16 linear system for the unknown dual parts."""

    matrix: list
    rhs: list
    labels: list

    def to_json(self):
        return {
            "labels": list(self.labels),
            "matrix": [[scalar_to_json(x) for x in row] for row in self.matrix],
            "rhs": [scalar_to_json(x) for x in self.rhs],
        }


def _dual_residuals(seed: DualSeed, primal: AltFactorizationPair,
                    h_prime: DualQuaternion, m_prime: DualQuaternion,
                    unknowns) -> list:
    """The 40 residual values for a given assignment of the 16 unknowns."""
    l_d = Quaternion(*unknowns[0:4])
    n_d = Quaternion(*unknowns[4:8])
    lp_d = Quaternion(*unknowns[8:12])
    np_d = Quaternion(*unknowns[12:16])

    ell = DualQuaternion(primal.ell.primal, l_d)
    n = DualQuaternion(as_dq(seed.n_p).primal, n_d)
    ellp = DualQuaternion(primal.ell_prime.primal, lp_d)
    np_ = DualQuaternion(primal.n_prime.primal, np_d)

    left = pmul(UniPoly.linear("t", seed.h), UniPoly.linear("s", ell),
                UniPoly.linear("t", seed.m), UniPoly.linear("s", n))
    right = pmul(UniPoly.linear("s", np_), UniPoly.linear("t", m_prime),
                 UniPoly.linear("s", ellp), UniPoly.linear("t", h_prime))
    diff = left - right

    rows = []
    for (i, j, c) in COEFF_ROW_KEYS:
        rows.append(diff.coeff(i, j).dual.coeffs()[c])
    # Motion polynomial constraints on the four s-factors, in the order
    # l, l', n, n'; each contributes the Study product and the dual scalar.
    for p, d in ((ell.primal, l_d), (ellp.primal, lp_d),
                 (n.primal, n_d), (np_.primal, np_d)):
        rows.append(2 * p.dot(d))
        rows.append(2 * d.w)
    return rows


def assemble_system(seed: DualSeed, primal: AltFactorizationPair,
                    h_prime: DualQuaternion,
                    m_prime: DualQuaternion) -> DualSystem:
    """Build the 40x16 system by probing the affine residual map."""
    zero = [Fraction(0)] * 16
    base = _dual_residuals(seed, primal, h_prime, m_prime, zero)
    matrix = [[Fraction(0)] * 16 for _ in range(40)]
    for k in range(16):
        probe = list(zero)
        probe[k] = Fraction(1)
        col = _dual_residuals(seed, primal, h_prime, m_prime, probe)
        for r in range(40):
            matrix[r][k] = Fraction(col[r]) - Fraction(base[r])
    rhs = [-Fraction(b) for b in base]
    return DualSystem(matrix=matrix, rhs=rhs, labels=list(UNKNOWN_LABELS))


def solve_system(sys: DualSystem) -> LinearSolution:
    """Exact solve; raises Inconsistent on nonzero residual rows."""
    sol = solve_exact(sys.matrix, sys.rhs)
    assert all(r == 0 for r in residual(sys.matrix, sys.rhs, sol.particular))
    return sol


def dualize_factorization(seed: DualSeed) -> AltFactorizationPair:
    """Run the full pipeline: dual Bennett flip, primal factorization, and
    the linear solve for the remaining dual parts."""
    seed.validate()
    m_prime, h_prime = bennett_flip(seed.h, seed.m)
    primal = alt_factorize(seed.h.primal, seed.m.primal, seed.n_p)
    system = assemble_system(seed, primal, h_prime, m_prime)
    sol = solve_system(system)
    u = sol.particular
    ell = DualQuaternion(primal.ell.primal, Quaternion(*u[0:4]))
    n = DualQuaternion(as_dq(seed.n_p).primal, Quaternion(*u[4:8]))
    ellp = DualQuaternion(primal.ell_prime.primal, Quaternion(*u[8:12]))
    np_ = DualQuaternion(primal.n_prime.primal, Quaternion(*u[12:16]))

    left = FactorTuple.of(("t", seed.h), ("s", ell), ("t", seed.m), ("s", n))
    right = FactorTuple.of(("s", np_), ("t", m_prime),
                           ("s", ellp), ("t", h_prime))
    return AltFactorizationPair(left=left, right=right, product=left.product())
