"""Command-line front end: ``planeop {classify,polar,norm,angles,mean-angle,trajectory}``.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (singular,
degenerate, reflection, det != 1).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import __version__
from .angles import rotation_range
from .core import PlaneOpError, classify, discriminants
from .meanangle import (
    ACCEPTANCE,
    MEAN_ALPHA,
    MEAN_GAMMA_PRIME,
    acceptance_ratio,
    estimate_mean_alpha,
    estimate_mean_gamma_prime,
    mean_gamma_interval,
)
from .polar import Indeterminate, cos_alpha_bound_check, operator_norm, polar_decompose
from .trajectory import ellipse_through, invariant_basis, orbit

SCHEMA = 1
SEED_ENV = "PLANEOP_SEED"
MIN_SAMPLES = 10_000


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    samples: int = 1_000_000
    iterations: int = 64
    fmt: str = "text"
    output: Optional[str] = None


def _number(text: str) -> float:
    try:
        value = float(text.strip())
    except ValueError:
        raise UsageError(f"not a number: {text.strip()!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"not a finite number: {text.strip()!r}")
    return value


def parse_matrix(text: str) -> np.ndarray:
    """Parse ``"a,b;c,d"`` or a JSON ``[[a,b],[c,d]]`` into a 2x2 array."""
    text = text.strip()
    if text.startswith("["):
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad JSON matrix: {exc}") from None
        if not (
            isinstance(rows, list)
            and len(rows) == 2
            and all(isinstance(r, list) and len(r) == 2 for r in rows)
        ):
            raise UsageError("JSON matrix must be [[a,b],[c,d]]")
        try:
            values = [_number(str(v)) for r in rows for v in r]
        except UsageError:
            raise UsageError("JSON matrix entries must be finite numbers") from None
    else:
        rows = text.split(";")
        if len(rows) != 2 or any(len(r.split(",")) != 2 for r in rows):
            raise UsageError(f"matrix must look like 'a,b;c,d', got {text!r}")
        values = [_number(v) for r in rows for v in r.split(",")]
    return np.array(values, dtype=float).reshape(2, 2)


def parse_point(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"point must look like 'x,y', got {text!r}")
    return np.array([_number(p) for p in parts])


def _deg(rad: float) -> str:
    return f"{math.degrees(rad):.2f}°"


def _fmt_matrix(M) -> str:
    return "[[{!r}, {!r}], [{!r}, {!r}]]".format(*(float(v) for v in np.ravel(M)))


def _vec(v) -> list:
    return [float(x) for x in v]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}))
    else:
        print(text)


def cmd_classify(args) -> None:
    A = parse_matrix(args.matrix)
    disc = discriminants(A)
    sp = classify(A)
    if sp.kind == "complex":
        payload = {"command": "classify", "class": "complex", "re": sp.re, "im": sp.im}
        text = f"complex spectrum, eigenvalues {sp.re:g} ± {sp.im:g}i"
    else:
        payload = {
            "command": "classify",
            "class": "real",
            "lambda1": sp.lambda1,
            "lambda2": sp.lambda2,
            "u1": _vec(sp.u1),
            "u2": _vec(sp.u2),
            "beta": sp.beta,
        }
        text = (
            f"real spectrum, λ1={sp.lambda1:g}, λ2={sp.lambda2:g}, β={math.degrees(sp.beta):g}°\n"
            f"u1 = {_vec(sp.u1)}\nu2 = {_vec(sp.u2)}"
        )
    payload["discriminant"] = disc.via_difference
    text += f"\ndiscriminant {disc.via_difference!r}"
    _emit(args, payload, text)


def cmd_polar(args) -> None:
    A = parse_matrix(args.matrix)
    p = polar_decompose(A)
    payload = {
        "command": "polar",
        "alpha": p.alpha,
        "O": p.O.tolist(),
        "B": p.B.tolist(),
        "singular_values": [p.sqrt_lambda, p.sqrt_mu],
        "e1": _vec(p.e1),
        "e2": _vec(p.e2),
    }
    lines = [
        f"alpha = {p.alpha!r} rad ({_deg(p.alpha)})",
        f"O = {_fmt_matrix(p.O)}",
        f"B = {_fmt_matrix(p.B)}",
        f"singular values = {p.sqrt_lambda!r}, {p.sqrt_mu!r}",
        f"e1 = {_vec(p.e1)}, e2 = {_vec(p.e2)}",
    ]
    try:
        check = cos_alpha_bound_check(p)
    except Indeterminate:
        payload["bound_side"] = None
    else:
        payload["bound_side"] = check.side
        payload["bound"] = check.bound
        lines.append(
            f"cos(alpha) = {check.cos_alpha:.6g} is {check.side} the bound {check.bound:.6g}"
            f" ({check.spectrum_kind} spectrum)"
        )
    _emit(args, payload, "\n".join(lines))


def cmd_norm(args) -> None:
    A = parse_matrix(args.matrix)
    n = operator_norm(A)
    _emit(args, {"command": "norm", "norm": n}, repr(n))


def cmd_angles(args) -> None:
    A = parse_matrix(args.matrix)
    r = rotation_range(A)
    payload = {
        "command": "angles",
        "gamma_min": r.gamma_min,
        "gamma_max": r.gamma_max,
        "mode": r.mode.value,
    }
    text = (
        f"[{_deg(r.gamma_min)}, {_deg(r.gamma_max)}], {r.mode.value} "
        f"({r.gamma_min!r} to {r.gamma_max!r} rad)"
    )
    _emit(args, payload, text)


def _est_json(e) -> dict:
    return {"mean": e.mean, "std_error": e.std_error, "n_accepted": e.n_accepted}


def cmd_mean_angle(args) -> None:
    cfg = RunConfig(seed=_seed(args.seed), samples=args.samples)
    if cfg.samples < MIN_SAMPLES:
        raise UsageError(f"--samples must be at least {MIN_SAMPLES}")
    acc = acceptance_ratio(cfg.seed, cfg.samples)
    g = estimate_mean_gamma_prime(cfg.seed, cfg.samples)
    a = estimate_mean_alpha(cfg.seed, cfg.samples)
    lo, hi = mean_gamma_interval(g, a)
    payload = {
        "command": "mean-angle",
        "seed": cfg.seed,
        "samples": cfg.samples,
        "acceptance": _est_json(acc),
        "mean_gamma_prime_max": _est_json(g),
        "mean_alpha": _est_json(a),
        "interval": [lo, hi],
        "reference": {
            "acceptance": ACCEPTANCE,
            "mean_gamma_prime_max": MEAN_GAMMA_PRIME,
            "mean_alpha": MEAN_ALPHA,
            "interval": [MEAN_ALPHA - MEAN_GAMMA_PRIME, MEAN_ALPHA + MEAN_GAMMA_PRIME],
        },
    }
    text = "\n".join(
        [
            f"samples            {cfg.samples} (seed {cfg.seed})",
            f"acceptance ratio   {acc.mean:.6f} ± {acc.std_error:.6f}   reference 1/4 = {ACCEPTANCE}",
            f"mean gamma'_max    {g.mean:.6f} ± {g.std_error:.6f}   reference 2/pi = {MEAN_GAMMA_PRIME:.6f}",
            f"mean alpha         {a.mean:.6f} ± {a.std_error:.6f}   reference pi/2 = {MEAN_ALPHA:.6f}",
            f"mean gamma within  [{lo:.6f}, {hi:.6f}]   reference "
            f"[{MEAN_ALPHA - MEAN_GAMMA_PRIME:.6f}, {MEAN_ALPHA + MEAN_GAMMA_PRIME:.6f}]",
        ]
    )
    _emit(args, payload, text)


def render_svg(ellipse, points, segments: int = 256) -> str:
    """Static SVG with the ellipse outline and orbit markers (y axis pointing up)."""
    wx = math.hypot(ellipse.a * ellipse.major_axis[0], ellipse.b * ellipse.minor_axis[0])
    wy = math.hypot(ellipse.a * ellipse.major_axis[1], ellipse.b * ellipse.minor_axis[1])
    wx, wy = 1.1 * wx, 1.1 * wy
    marker = 0.015 * max(wx, wy)
    stroke = 0.005 * max(wx, wy)
    outline = " ".join(f"{x!r},{-y!r}" for x, y in ellipse.outline(segments).tolist())
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{-wx!r} {-wy!r} {2 * wx!r} {2 * wy!r}">',
        f'<polyline fill="none" stroke="black" stroke-width="{stroke!r}" points="{outline}"/>',
    ]
    for x, y in points:
        out.append(f'<circle cx="{float(x)!r}" cy="{-float(y)!r}" r="{marker!r}" fill="crimson"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_trajectory(args) -> None:
    A = parse_matrix(args.matrix)
    x0 = parse_point(args.point)
    if args.iterations < 1:
        raise UsageError("-n/--iterations must be at least 1")
    ell = ellipse_through(A, x0)
    orb = orbit(A, x0, args.iterations)
    theta = invariant_basis(A).theta
    residuals = np.abs(ell.residual(orb.points))

    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["k", "x", "y", "form_residual"])
            for k, ((x, y), res) in enumerate(zip(orb.points, residuals)):
                w.writerow([k, repr(float(x)), repr(float(y)), repr(float(res))])
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(ell, orb.points))

    payload = {
        "command": "trajectory",
        "theta": theta,
        "period": orb.period,
        "S": ell.S,
        "delta": ell.delta,
        "Delta": ell.Delta,
        "a": ell.a,
        "b": ell.b,
        "r2": ell.r2,
        "major_axis": _vec(ell.major_axis),
        "minor_axis": _vec(ell.minor_axis),
        "max_form_residual": float(residuals.max()),
        "points": orb.points.shape[0],
    }
    text = "\n".join(
        [
            f"theta = {theta!r} rad ({_deg(theta)})",
            f"period = {orb.period if orb.period is not None else 'none found'}",
            f"S = {ell.S!r}, delta = {ell.delta!r}, Delta = {ell.Delta!r}",
            f"a = {ell.a!r}, b = {ell.b!r}",
            f"major axis {_vec(ell.major_axis)}, minor axis {_vec(ell.minor_axis)}",
            f"max form residual {residuals.max():.3g} over {orb.points.shape[0]} points",
        ]
    )
    _emit(args, payload, text)


def _seed(flag: Optional[int]) -> int:
    if flag is not None:
        seed = flag
    else:
        raw = os.environ.get(SEED_ENV)
        if raw is None:
            return 0
        try:
            seed = int(raw)
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None
    if not 0 <= seed < 2**64:
        raise UsageError("seed must be in [0, 2**64)")
    return seed


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1,2;3,4" through as a value rather than an unknown flag
        self._negative_number_matcher = re.compile(r"^-\.?\d")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="planeop", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    with_matrix = _Parser(add_help=False, parents=[common])
    with_matrix.add_argument(
        "-m", "--matrix", required=True, help="'a,b;c,d' or JSON [[a,b],[c,d]]"
    )

    for name, func, helptext in [
        ("classify", cmd_classify, "spectrum class and eigen-data"),
        ("polar", cmd_polar, "polar decomposition A = O B"),
        ("norm", cmd_norm, "operator norm"),
        ("angles", cmd_angles, "range of the rotation angle between x and A x"),
    ]:
        p = sub.add_parser(name, parents=[with_matrix], help=helptext)
        p.set_defaults(func=func)

    p = sub.add_parser("mean-angle", parents=[common], help="Monte Carlo mean rotation angles")
    p.add_argument("--samples", type=int, default=RunConfig.samples)
    p.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    p.set_defaults(func=cmd_mean_angle)

    p = sub.add_parser("trajectory", parents=[with_matrix], help="orbit on the invariant ellipse")
    p.add_argument("--point", required=True, help="starting point 'x,y'")
    p.add_argument("-n", "--iterations", type=int, default=RunConfig.iterations)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_trajectory)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"planeop: error: {exc}", file=sys.stderr)
        return 1
    except PlaneOpError as exc:
        print(f"planeop: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
