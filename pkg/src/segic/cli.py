"""Command-line front end: analyze / region / sweep / dynamics.

All commands read a JSON scenario file (see `segic.scenario`) and write
deterministic text or CSV. Exit codes: 0 success, 1 input error, 2 when
`analyze` finds no satisfaction equilibrium inside the power box.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import analysis, metrics, oracle
from .model import GameSpec, InvalidInputError, satisfied_mask, utilities
from .scenario import ScenarioError, load_scenario


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _default_poe_grid(game: GameSpec) -> float | None:
    # keep the oracle scan below ~10^5 points for interactive use
    if game.n <= 2:
        return game.p_max / 200.0
    if game.n == 3:
        return game.p_max / 40.0
    return None


def cmd_analyze(args) -> int:
    game, _ = load_scenario(args.scenario)
    report = analysis.analyze(game, tol=args.tol)
    feasible = report.exists and report.ese_in_box

    out = {
        "exists": report.exists,
        "condition_product": report.condition_product,
        "ese": None if report.ese is None else list(report.ese),
        "ese_in_box": report.ese_in_box,
        "tightness": None if report.tightness is None else list(report.tightness),
        "poe": None,
        "mposa": None,
    }
    if feasible:
        mposa, _ = metrics.max_price_of_satisfaction(game)
        out["mposa"] = mposa
        step = _default_poe_grid(game)
        if step is not None:
            scan = oracle.enumerate_grid(game, step)
            if not scan.is_empty:
                out["poe"] = metrics.price_of_efficiency(game, scan)

    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        for key in (
            "exists",
            "condition_product",
            "ese",
            "ese_in_box",
            "tightness",
            "poe",
            "mposa",
        ):
            val = out[key]
            if val is None:
                text = "null"
            elif isinstance(val, bool):
                text = "true" if val else "false"
            elif isinstance(val, list):
                text = " ".join(_fmt(v) for v in val)
            else:
                text = _fmt(val)
            print(f"{key}: {text}")
    return 0 if feasible else 2


def cmd_region(args) -> int:
    game, _ = load_scenario(args.scenario)
    if game.n > 3:
        print(f"error: region export supports n <= 3, got n = {game.n}", file=sys.stderr)
        return 1
    axis = np.linspace(0.0, game.p_max, args.grid + 1)
    header = (
        [f"p{i + 1}" for i in range(game.n)]
        + [f"satisfied_{i + 1}" for i in range(game.n)]
        + ["is_se"]
    )
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for idx in np.ndindex(*([axis.size] * game.n)):
            p = axis[list(idx)]
            sat = satisfied_mask(game, p)
            writer.writerow(
                [_fmt(v) for v in p]
                + [int(s) for s in sat]
                + [int(bool(np.all(sat)))]
            )
    return 0


_SWEEP_PARAMS = ("a12", "a21", "gamma_1", "gamma_2", "noise_1", "noise_2", "p_max")


def _apply_param(game: GameSpec, name: str, value: float) -> GameSpec:
    a = game.attenuation.copy()
    noise = game.noise.copy()
    gammas = game.thresholds.copy()
    p_max = game.p_max
    if name == "a12":
        a[0, 1] = value
    elif name == "a21":
        a[1, 0] = value
    elif name == "gamma_1":
        gammas[0] = value
    elif name == "gamma_2":
        gammas[1] = value
    elif name == "noise_1":
        noise[0] = value
    elif name == "noise_2":
        noise[1] = value
    elif name == "p_max":
        p_max = value
    else:
        raise InvalidInputError(f"unknown sweep parameter: {name}")
    return GameSpec(attenuation=a, noise=noise, thresholds=gammas, p_max=p_max)


def cmd_sweep(args) -> int:
    game, _ = load_scenario(args.scenario)
    if game.n != 2:
        print("error: sweep supports two-player scenarios only", file=sys.stderr)
        return 1
    if args.param not in _SWEEP_PARAMS:
        print(
            f"error: unknown parameter {args.param!r}; choose from {', '.join(_SWEEP_PARAMS)}",
            file=sys.stderr,
        )
        return 1
    values = np.linspace(args.start, args.stop, args.steps)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([args.param, "exists", "ese_1", "ese_2", "ese_in_box", "mposa"])
        for value in values:
            swept = _apply_param(game, args.param, float(value))
            report = analysis.analyze(swept, tol=args.tol)
            row = [_fmt(value), int(report.exists)]
            if report.exists:
                row += [_fmt(report.ese[0]), _fmt(report.ese[1]), int(report.ese_in_box)]
                if report.ese_in_box:
                    mposa, _ = metrics.max_price_of_satisfaction(swept)
                    row.append(_fmt(mposa))
                else:
                    row.append("")
            else:
                row += ["", "", "", ""]
            writer.writerow(row)
    return 0


def cmd_dynamics(args) -> int:
    game, _ = load_scenario(args.scenario)
    p = np.zeros(game.n)
    rows = [(0, p.copy(), utilities(game, p))]
    converged = False
    iters = 0
    for k in range(1, args.max_iters + 1):
        p, _, step_converged = analysis.satisfaction_response_dynamics(
            game, p, max_iters=1, tol=args.tol
        )
        rows.append((k, p.copy(), utilities(game, p)))
        iters = k
        if step_converged:
            converged = True
            break

    if args.trace:
        with open(args.trace, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["iteration"]
                + [f"p{i + 1}" for i in range(game.n)]
                + [f"u{i + 1}" for i in range(game.n)]
            )
            for k, powers, us in rows:
                writer.writerow([k] + [_fmt(v) for v in powers] + [_fmt(v) for v in us])

    is_se = analysis.is_satisfaction_equilibrium(game, p, tol=args.tol)
    print(f"converged: {'true' if converged else 'false'}")
    print(f"iterations: {iters}")
    print(f"final: {' '.join(_fmt(v) for v in p)}")
    print(f"utilities: {' '.join(_fmt(v) for v in utilities(game, p))}")
    print(f"is_se: {'true' if is_se else 'false'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segic",
        description="Satisfaction-equilibrium analysis of GIC power-control games",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="existence, ESE, tightness, PoE, MPoSa")
    p_an.add_argument("scenario")
    p_an.add_argument("--tol", type=float, default=1e-9)
    fmt = p_an.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", dest="json", action="store_false")
    p_an.set_defaults(func=cmd_analyze, json=False)

    p_rg = sub.add_parser("region", help="CSV sampling of the SE region (n <= 3)")
    p_rg.add_argument("scenario")
    p_rg.add_argument("--grid", type=int, default=100, metavar="K")
    p_rg.add_argument("--out", required=True)
    p_rg.set_defaults(func=cmd_region)

    p_sw = sub.add_parser("sweep", help="sweep one parameter, CSV output")
    p_sw.add_argument("scenario")
    p_sw.add_argument("--param", required=True)
    p_sw.add_argument("--from", dest="start", type=float, required=True)
    p_sw.add_argument("--to", dest="stop", type=float, required=True)
    p_sw.add_argument("--steps", type=int, required=True)
    p_sw.add_argument("--tol", type=float, default=1e-9)
    p_sw.add_argument("--out", required=True)
    p_sw.set_defaults(func=cmd_sweep)

    p_dy = sub.add_parser("dynamics", help="satisfaction-response iteration from zero")
    p_dy.add_argument("scenario")
    p_dy.add_argument("--max-iters", type=int, default=10000)
    p_dy.add_argument("--tol", type=float, default=1e-9)
    p_dy.add_argument("--trace")
    p_dy.set_defaults(func=cmd_dynamics)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ScenarioError, InvalidInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except analysis.DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())
