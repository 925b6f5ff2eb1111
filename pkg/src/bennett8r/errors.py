"""Exception hierarchy shared by all bennett8r modules.

Exit-code mapping used by the CLI:
    2 -> HypothesisViolated
    3 -> GenericityViolated
    4 -> Inconsistent
    5 -> degenerate geometry (DegenerateAxis and friends)
"""


class Bennett8RError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class NotInvertible(Bennett8RError):
    """Dual quaternion with zero primal part has no inverse."""


class DegenerateDisplacement(Bennett8RError):
    """Group action attempted with an element whose norm has zero real part."""

    exit_code = 5


class SingularMap(Bennett8RError):
    """Moebius reparametrization with ad - bc = 0."""


class ZeroDivisor(Bennett8RError):
    """Polynomial division by the zero polynomial."""


class FlipSingular(Bennett8RError):
    """Bennett flip attempted on a pair with non-invertible conj(h1) - h2."""

    exit_code = 2


class NoUniqueSolution(Bennett8RError):
    """The quaternionic linear equation x*b - a*x = c has no unique solution."""

    exit_code = 2


class HypothesisViolated(Bennett8RError):
    """Input violates the scalar/norm hypothesis of the factorization step."""

    exit_code = 2


class GenericityViolated(Bennett8RError):
    """A genericity condition (commutation test or denominator) fails."""

    exit_code = 3


class Inconsistent(Bennett8RError):
    """Linear system has no solution (nonzero residual)."""

    exit_code = 4


class DegenerateAxis(Bennett8RError):
    """A factor's vector part has zero direction and defines no line."""

    exit_code = 5


class DegenerateConfiguration(Bennett8RError):
    """Axis pose evaluation hit a vanishing norm denominator."""

    exit_code = 5


class DegeneratePair(Bennett8RError):
    """Consecutive axes are parallel or identical; DH data undefined."""

    exit_code = 5


class IdenticalLines(Bennett8RError):
    """Common normal of a line with itself is undefined."""

    exit_code = 5


class AllParallel(Bennett8RError):
    """Alignment check cannot seed a candidate normal."""

    exit_code = 5


class ZeroDistance(Bennett8RError):
    """Bennett ratio undefined for intersecting consecutive axes."""

    exit_code = 5
