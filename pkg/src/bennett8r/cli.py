"""Command line front end.

Subcommands:
    factor     build both alternating factorizations from a seed file
    mechanism  full pipeline: mechanism, verification report, axis samples
    dh         DH table (and closed forms for canonical seeds)

Seed files are single JSON documents with a "mode" field:
    primal     {"mode": "primal", "h": [...], "m": [...], "n": [...]}
    dual       primal fields plus "h_d" and "m_d"
    canonical  {"mode": "canonical", "params": {"h1": ..., ..., "nu": ...}}
Quaternions are arrays [w, x, y, z]; rationals may be written as "p/q"
strings.  Output is deterministic: a fixed seed and flags always produce
byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .dualquat import DualQuaternion, Quaternion, as_dq
from .errors import Bennett8RError
from .dualize import DualSeed, dualize_factorization
from .factor import alt_factorize, verify_alternating
from .lines import common_normal
from .mechanism import (AXIS_NAMES, CanonicalParams, ConfigPoint,
                        MechanismSpec, aligned_configs, axis_pose,
                        bennett_ratio, bennett_ratio_closed, bennett_sub,
                        build_canonical, check_alignment, dh_closed_form,
                        dh_parameters, zero_config_axes)
from .qpoly import INF, is_inf
from .scalars import EPS_TOL, scalar_from_json, scalar_to_json

CANONICAL_KEYS = ("h1", "h2", "h3", "m2", "m3", "n0", "n2", "n3", "mu", "nu")


class SeedError(Bennett8RError):
    """Malformed seed file or flag combination."""

    exit_code = 1


def _load_seed(path: str, mode_override, exact: bool) -> dict:
    with open(path) as fh:
        raw = json.load(fh)
    mode = mode_override or raw.get("mode")
    if mode not in ("primal", "dual", "canonical"):
        raise SeedError(f"unknown seed mode: {mode!r}")
    seed = {"mode": mode}
    if mode == "canonical":
        params = raw.get("params")
        if not isinstance(params, dict) or set(params) != set(CANONICAL_KEYS):
            raise SeedError(
                "canonical seed needs a 'params' object with keys "
                + ", ".join(CANONICAL_KEYS))
        seed["params"] = CanonicalParams(
            *[scalar_from_json(params[k], exact) for k in CANONICAL_KEYS])
        return seed
    for key in ("h", "m", "n"):
        seed[key] = _quat(raw, key, exact)
    if mode == "dual":
        seed["h_d"] = _quat(raw, "h_d", exact)
        seed["m_d"] = _quat(raw, "m_d", exact)
    return seed


def _quat(raw: dict, key: str, exact: bool) -> Quaternion:
    v = raw.get(key)
    if not isinstance(v, list) or len(v) != 4:
        raise SeedError(f"seed field {key!r} must be an array [w, x, y, z]")
    return Quaternion(*[scalar_from_json(c, exact) for c in v])


def _build_pair(seed: dict):
    if seed["mode"] == "primal":
        return alt_factorize(seed["h"], seed["m"], seed["n"])
    if seed["mode"] == "dual":
        dual_seed = DualSeed(h=DualQuaternion(seed["h"], seed["h_d"]),
                             m=DualQuaternion(seed["m"], seed["m_d"]),
                             n_p=seed["n"])
        return dualize_factorization(dual_seed)
    return build_canonical(seed["params"]).pair


def _build_spec(seed: dict) -> MechanismSpec:
    if seed["mode"] == "canonical":
        return build_canonical(seed["params"])
    return MechanismSpec.from_pair(_build_pair(seed))


# --- grids ------------------------------------------------------------------

def parse_grid(text: str, exact: bool):
    """Grid flag: either 'NxM' (over [-10, 10] plus inf on both axes) or an
    explicit comma-separated value list with an 'inf' token."""
    if "x" in text and "," not in text:
        try:
            ns, nt = (int(p) for p in text.split("x"))
        except ValueError:
            raise SeedError(f"bad grid spec: {text!r}") from None
        if ns < 2 or nt < 2:
            raise SeedError("grid needs at least 2 samples per axis")
        return (_linspace(ns, exact) + [INF], _linspace(nt, exact) + [INF])
    values = []
    for tok in text.split(","):
        tok = tok.strip()
        values.append(INF if tok == "inf" else scalar_from_json(tok, exact))
    if not values:
        raise SeedError("empty grid")
    return values, list(values)


def _linspace(n: int, exact: bool, lo=-10, hi=10):
    vals = [Fraction(lo) + Fraction(hi - lo) * i / (n - 1) for i in range(n)]
    return vals if exact else [float(v) for v in vals]


def _value_json(v):
    return "inf" if is_inf(v) else scalar_to_json(v)


def _line_json(line):
    return {"direction": [scalar_to_json(c) for c in line.direction()],
            "moment": [scalar_to_json(c) for c in line.moment()]}


# --- subcommands ------------------------------------------------------------

def cmd_factor(seed: dict, args) -> dict:
    if seed["mode"] == "canonical":
        raise SeedError("'factor' needs a primal or dual seed")
    pair = _build_pair(seed)
    report = verify_alternating(pair, args.tol)
    return {"factorization": pair.to_json(), "report": report.to_json()}


def cmd_mechanism(seed: dict, args) -> dict:
    spec = _build_spec(seed)
    pair = spec.pair
    report = verify_alternating(pair, args.tol)

    s_vals, t_vals = parse_grid(args.grid, args.arithmetic == "rational")
    aligned = []
    trajectory = []
    for s in s_vals:
        for t in t_vals:
            point = ConfigPoint(s, t)
            row = {"s": _value_json(s), "t": _value_json(t)}
            try:
                frame = axis_pose(spec, point)
                row["axes"] = {name: _line_json(frame.axis(name))
                               for name in AXIS_NAMES}
                if check_alignment(frame, args.tol):
                    aligned.append({"s": row["s"], "t": row["t"]})
            except Bennett8RError as exc:
                row["error"] = type(exc).__name__
            trajectory.append(row)

    out = {"mechanism": spec.to_json(),
           "report": report.to_json(),
           "aligned_grid_points": aligned,
           "trajectory": trajectory}
    if spec.canonical is not None:
        out["aligned_configs"] = [
            {"s": _value_json(p.s), "t": _value_json(p.t)}
            for p in aligned_configs(spec)]
        probe = Fraction(4, 9) if args.arithmetic == "rational" else 4 / 9
        sub = bennett_sub(spec, "t", probe)
        measured = bennett_ratio(sub, args.tol)
        closed = bennett_ratio_closed(spec.canonical, probe)
        out["bennett_ratio"] = {
            "s": _value_json(probe),
            "measured": abs(measured),
            "closed_form": abs(closed),
            "match": abs(abs(measured) - abs(closed))
                     <= 1e-8 * max(1.0, abs(closed)),
        }
    return out


def cmd_dh(seed: dict, args) -> dict:
    spec = _build_spec(seed)
    frame = zero_config_axes(spec)
    table = dh_parameters(frame, args.tol)
    out = {"table": table.to_json(),
           "offsets_zero": all(abs(o) <= args.tol for o in table.offsets)}
    if spec.canonical is not None:
        dists, cos_sq = dh_closed_form(spec.canonical)
        out["closed_form"] = {
            "distances": [scalar_to_json(d) for d in dists],
            "cos_sq_angles": [scalar_to_json(c) for c in cos_sq],
        }
        import math
        measured_d = sorted(table.distances)
        measured_c = sorted(math.cos(a) ** 2 for a in table.angles)
        expect_d = sorted(abs(float(d)) for d in dists for _ in range(2))
        expect_c = sorted(float(c) for c in cos_sq for _ in range(2))
        out["multiset_match"] = (
            all(abs(a - b) <= args.tol for a, b in zip(measured_d, expect_d))
            and all(abs(a - b) <= args.tol
                    for a, b in zip(measured_c, expect_c)))
    return out


COMMANDS = {"factor": cmd_factor, "mechanism": cmd_mechanism, "dh": cmd_dh}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bennett8r",
        description="Alternating factorizations and the 8R mechanism")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("factor", "build both factorizations"),
                            ("mechanism", "full pipeline with verification"),
                            ("dh", "DH table")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("seed", help="path to a JSON seed file")
        p.add_argument("--mode", choices=("primal", "dual", "canonical"),
                       help="override the seed file's mode field")
        p.add_argument("--arithmetic", choices=("rational", "float"),
                       default="rational")
        p.add_argument("--tol", type=float, default=EPS_TOL)
        p.add_argument("--out", help="output path (default: stdout)")
        if name == "mechanism":
            p.add_argument("--grid", default="21x21",
                           help="'NxM' over [-10,10] plus inf, or a comma "
                                "list of values with an 'inf' token")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        seed = _load_seed(args.seed, args.mode,
                          args.arithmetic == "rational")
        result = COMMANDS[args.command](seed, args)
    except Bennett8RError as exc:
        payload = {"error": type(exc).__name__, "message": str(exc),
                   "exit_code": exc.exit_code}
        print(json.dumps(payload, sort_keys=True), file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(json.dumps({"error": "OSError", "message": str(exc),
                          "exit_code": 1}, sort_keys=True), file=sys.stderr)
        return 1
    result["version"] = __version__
    result["command"] = args.command
    text = json.dumps(result, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
