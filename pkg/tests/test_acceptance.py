"""Acceptance gate: the eight headline guarantees, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines.
"""

import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

from bennett8r.dualize import DualSeed, dualize_factorization, \
    assemble_system, solve_system
from bennett8r.factor import alt_factorize, bennett_flip, verify_alternating
from bennett8r.linsolve import residual
from bennett8r.mechanism import (ConfigPoint, axis_pose, bennett_ratio,
                                 bennett_ratio_closed, bennett_sub,
                                 build_canonical, check_alignment,
                                 consecutive_ratios, dh_closed_form,
                                 dh_parameters, zero_config_axes)
from bennett8r.qpoly import INF

from conftest import (CANONICAL_STD, ELL_D_EXPECT, ELL_EXPECT, H_DUAL,
                      H_P, HP_DUAL_EXPECT, HP_EXPECT, LP_D_EXPECT, LP_EXPECT,
                      M_DUAL, M_P, MP_DUAL_EXPECT, MP_EXPECT, N_D_EXPECT,
                      N_P, NP_D_EXPECT, NP_EXPECT, random_admissible_triple,
                      random_canonical)

FIXTURES = Path(__file__).parent / "fixtures"


def _verdict(number: int, label: str, ok: bool):
    print(f"\nACCEPTANCE {number} ({label}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {number} failed: {label}"


def test_acceptance_1_primal_example():
    start = time.monotonic()
    pair = alt_factorize(H_P, M_P, N_P)
    elapsed = time.monotonic() - start
    ok = (pair.ell.primal == ELL_EXPECT
          and pair.n_prime.primal == NP_EXPECT
          and pair.m_prime.primal == MP_EXPECT
          and pair.ell_prime.primal == LP_EXPECT
          and pair.h_prime.primal == HP_EXPECT
          and elapsed < 1.0)
    _verdict(1, "primal worked example, exact, < 1 s", ok)


def test_acceptance_2_dual_example():
    start = time.monotonic()
    seed = DualSeed(h=H_DUAL, m=M_DUAL, n_p=N_P)
    pair = dualize_factorization(seed)
    m_prime, h_prime = bennett_flip(seed.h, seed.m)
    primal = alt_factorize(seed.h.primal, seed.m.primal, seed.n_p)
    system = assemble_system(seed, primal, h_prime, m_prime)
    sol = solve_system(system)
    res = residual(system.matrix, system.rhs, sol.particular)
    elapsed = time.monotonic() - start
    ok = (pair.ell.dual == ELL_D_EXPECT
          and pair.n.dual == N_D_EXPECT
          and pair.ell_prime.dual == LP_D_EXPECT
          and pair.n_prime.dual == NP_D_EXPECT
          and pair.m_prime == MP_DUAL_EXPECT
          and pair.h_prime == HP_DUAL_EXPECT
          and len(res) == 40 and all(r == 0 for r in res)
          and elapsed < 1.0)
    _verdict(2, "dual worked example, exact, zero residual on 40 rows, < 1 s",
             ok)


def test_acceptance_3_random_factorization_suite():
    rng = random.Random(3)
    start = time.monotonic()
    ok = True
    for _ in range(100):
        h, m, n = random_admissible_triple(rng)
        report = verify_alternating(alt_factorize(h, m, n))
        if not report.all_passed:
            ok = False
            break
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 30.0
    _verdict(3, "100 random seeds verify all checks exactly, < 30 s", ok)


def _ten_specs():
    rng = random.Random(45)
    return [build_canonical(random_canonical(rng, as_float=True))
            for _ in range(10)], rng


def test_acceptance_4_dh_properties():
    specs, _ = _ten_specs()
    ok = True
    for spec in specs:
        table = dh_parameters(zero_config_axes(spec))
        if not all(abs(o) < 1e-9 for o in table.offsets):
            ok = False
        for i in range(4):
            if abs(table.distances[i] - table.distances[i + 4]) > 1e-9:
                ok = False
            if abs(table.angles[i] - table.angles[i + 4]) > 1e-9:
                ok = False
        dists, cos_sq = dh_closed_form(spec.canonical)
        measured_d = sorted(table.distances)
        expect_d = sorted(abs(d) for d in dists for _ in range(2))
        measured_c = sorted(math.cos(a) ** 2 for a in table.angles)
        expect_c = sorted(c for c in cos_sq for _ in range(2))
        if not all(abs(a - b) <= 1e-9
                   for a, b in zip(measured_d, expect_d)):
            ok = False
        if not all(abs(a - b) <= 1e-9
                   for a, b in zip(measured_c, expect_c)):
            ok = False
    _verdict(4, "10 random specs: zero offsets, opposite-pair equality, "
                "closed-form multisets, all at 1e-9", ok)


def test_acceptance_5_aligned_configurations():
    specs, rng = _ten_specs()
    ok = True
    for spec in specs:
        params = spec.canonical
        s_vals = ([rng.uniform(-10, 10) for _ in range(19)]
                  + [params.n0, INF])
        t_vals = ([rng.uniform(-10, 10) for _ in range(19)]
                  + [params.mu, INF])
        aligned = {(s, t) for s in s_vals for t in t_vals
                   if check_alignment(axis_pose(spec, ConfigPoint(s, t)),
                                      1e-9)}
        expected = {(s, t) for s in (params.n0, INF)
                    for t in (params.mu, INF)}
        if aligned != expected:
            ok = False
    _verdict(5, "10 random specs: exactly the four grid points "
                "{inf, n0} x {inf, mu} align at 1e-9", ok)


def test_acceptance_6_bennett_ratio():
    specs, rng = _ten_specs()
    ok = True
    checked = 0
    for spec in specs[:4]:
        for _ in range(5):
            s0 = rng.uniform(-8, 8)
            sub = bennett_sub(spec, "t", s0)
            ratios = consecutive_ratios(sub)
            spread = max(ratios) - min(ratios)
            if spread > 1e-9:
                ok = False
            measured = abs(bennett_ratio(sub))
            closed = abs(bennett_ratio_closed(spec.canonical, s0))
            if abs(measured - closed) > 1e-8 * max(1.0, closed):
                ok = False
            checked += 1
    ok = ok and checked == 20
    _verdict(6, "20 random s values: |sin(angle)/distance| matches the "
                "closed form at rel 1e-8, constant over pairs at 1e-9", ok)


def test_acceptance_7_axis_dependency_structure():
    spec = build_canonical(CANONICAL_STD)
    grid = [INF, Fraction(-2), Fraction(0), Fraction(1, 3), Fraction(4)]
    frames = {(s, t): axis_pose(spec, ConfigPoint(s, t))
              for s in grid for t in grid}
    base = frames[(grid[1], grid[1])]
    ok = True
    for s in grid:
        for t in grid:
            f = frames[(s, t)]
            if not (f.H.same_line(base.H) and f.Np.same_line(base.Np)):
                ok = False
            if not f.L.same_line(frames[(grid[2], t)].L):
                ok = False
            if not f.Mp.same_line(frames[(s, grid[2])].Mp):
                ok = False
    _verdict(7, "5x5 grid, exact arithmetic: H and N' constant, L moves "
                "only with t, M' only with s", ok)


def test_acceptance_8_cli_determinism():
    ok = True
    for argv in (["factor", str(FIXTURES / "primal.json")],
                 ["factor", str(FIXTURES / "dual.json")],
                 ["mechanism", str(FIXTURES / "canonical.json"),
                  "--grid", "inf,3,-2", "--arithmetic", "float"],
                 ["dh", str(FIXTURES / "canonical.json"),
                  "--arithmetic", "float"]):
        outputs = []
        for _ in range(2):
            proc = subprocess.run([sys.executable, "-m", "bennett8r.cli"]
                                  + argv, capture_output=True)
            if proc.returncode != 0:
                ok = False
            outputs.append(proc.stdout)
        if outputs[0] != outputs[1] or not outputs[0]:
            ok = False
        try:
            json.loads(outputs[0])
        except (ValueError, TypeError):
            ok = False
    _verdict(8, "repeated CLI runs on fixture seeds are byte-identical", ok)
