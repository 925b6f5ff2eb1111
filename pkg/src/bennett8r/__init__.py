"""Bivariate motion-polynomial factorization and the multi-Bennett 8R loop.

The package builds bidegree (2, 2) dual-quaternion polynomials that factor
into linear rotation factors in two alternating orders, extends such
factorizations from quaternions to dual quaternions by an exact linear
solve, and measures the geometry of the resulting closed 8R mechanism:
DH parameters, aligned configurations, Bennett sub-loops and their ratios.
"""

from .dualquat import (DualNumber, DualQuaternion, PluckerLine, PointH,
                       Quaternion, act_on_line, act_on_point, as_dq, dq,
                       dq_proportional, proportional, quat)
from .errors import (AllParallel, Bennett8RError, DegenerateAxis,
                     DegenerateConfiguration, DegenerateDisplacement,
                     DegeneratePair, FlipSingular, GenericityViolated,
                     HypothesisViolated, IdenticalLines, Inconsistent,
                     NotInvertible, NoUniqueSolution, ZeroDistance)
from .factor import (AltFactorizationPair, FactorTuple, Report, alt_factorize,
                     bennett_flip, construct_ell, solve_quat_linear,
                     verify_alternating)
from .dualize import (DualSeed, DualSystem, assemble_system,
                      dualize_factorization, solve_system)
from .lines import CommonNormal, common_normal, line_line_distance
from .mechanism import (AxisFrame, BennettSub, CanonicalParams, ConfigPoint,
                        DHTable, MechanismSpec, aligned_configs, axis_pose,
                        bennett_ratio, bennett_ratio_closed, bennett_sub,
                        build_canonical, check_alignment, consecutive_ratios,
                        dh_closed_form, dh_parameters, zero_config_axes)
from .qpoly import (INF, BiPoly, MobiusMap, UniPoly, divrem_by_real, is_inf,
                    is_motion_polynomial, peval, pmul, pnorm, reparametrize)
from .scalars import EPS_TOL

__version__ = "0.1.0"

__all__ = [
    "AllParallel", "AltFactorizationPair", "AxisFrame", "Bennett8RError",
    "BennettSub", "BiPoly", "CanonicalParams", "CommonNormal", "ConfigPoint",
    "DHTable", "DegenerateAxis", "DegenerateConfiguration",
    "DegenerateDisplacement", "DegeneratePair", "DualNumber",
    "DualQuaternion", "DualSeed", "DualSystem", "EPS_TOL", "FactorTuple",
    "FlipSingular", "GenericityViolated", "HypothesisViolated",
    "IdenticalLines", "INF", "Inconsistent", "MechanismSpec", "MobiusMap",
    "NoUniqueSolution", "NotInvertible", "PluckerLine", "PointH",
    "Quaternion", "Report", "UniPoly", "ZeroDistance", "act_on_line",
    "act_on_point", "aligned_configs", "alt_factorize", "as_dq",
    "assemble_system", "axis_pose", "bennett_flip", "bennett_ratio",
    "bennett_ratio_closed", "bennett_sub", "build_canonical",
    "check_alignment", "common_normal", "consecutive_ratios",
    "construct_ell", "dh_closed_form", "dh_parameters", "divrem_by_real",
    "dq", "dq_proportional", "dualize_factorization", "is_inf",
    "is_motion_polynomial", "line_line_distance", "peval", "pmul", "pnorm",
    "proportional", "quat", "reparametrize", "solve_quat_linear",
    "solve_system", "verify_alternating", "zero_config_axes",
]
