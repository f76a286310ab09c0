"""Command-line interface: run walks, evaluate limit laws, export plot data.

Four subcommands are provided::

    hexwalk simulate       write the site distribution at a fixed time
    hexwalk return-series  write the origin probability at even times
    hexwalk limit          report the closed-form long-time quantities
    hexwalk compare        check a finite-time run against the limit laws

The model is deterministic, so identical configurations produce
byte-identical output files.  Exit codes: 0 success, 1 invalid input,
2 computation failure, 3 comparison failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .coin import CoinParams, CoinState, build_coin
from .evolution import distribution, evolve, initial_wavefunction, step
from .lattice import Site, to_physical
from .limits import (
    QuadratureError,
    a_theta,
    asymptotic_origin_amplitude,
    delocalization_condition,
    delta_weight,
    limit_return_probability,
)

__all__ = [
    "RunConfig",
    "cmd_simulate",
    "cmd_return_series",
    "cmd_limit",
    "cmd_compare",
    "main",
]

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_COMPUTATION_FAILURE = 2
EXIT_COMPARISON_FAILED = 3


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run parameters shared by all subcommands."""

    theta: float
    alpha: complex
    beta: complex
    gamma: complex
    t_max: int
    output_path: str | None
    fmt: str
    tolerance: float = 0.01
    window: int = 10
    indices: bool = False
    preset: str | None = None

    def coin_params(self) -> CoinParams:
        if self.preset == "grover":
            return CoinParams.grover()
        return CoinParams(self.theta)

    def coin_state(self) -> CoinState:
        norm = math.sqrt(
            abs(self.alpha) ** 2 + abs(self.beta) ** 2 + abs(self.gamma) ** 2
        )
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(
                f"initial state must be normalized within 1e-9, |state| = {norm!r}"
            )
        return CoinState(self.alpha / norm, self.beta / norm, self.gamma / norm)


def _parse_complex(value: object, name: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(p, (int, float)) for p in value)
    ):
        return complex(value[0], value[1])
    raise ValueError(f"{name} must be a number or an [re, im] pair, got {value!r}")


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    raw: dict = {}
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        if not isinstance(raw, dict):
            raise ValueError("config file must contain a JSON object")

    preset = args.preset if args.preset is not None else raw.get("preset")
    theta = args.theta if args.theta is not None else raw.get("theta")
    if preset == "grover":
        theta = CoinParams.grover().theta
    elif preset is not None:
        raise ValueError(f"unknown preset {preset!r}")
    elif theta is None:
        raise ValueError("either --theta or --preset (or a config key) is required")

    if args.state is not None:
        parts = args.state.split(",")
        if len(parts) != 3:
            raise ValueError("--state must be three comma-separated reals")
        try:
            alpha, beta, gamma = (complex(float(p)) for p in parts)
        except ValueError as exc:
            raise ValueError(f"--state components must be real numbers: {exc}") from exc
    elif {"alpha", "beta", "gamma"} <= raw.keys():
        alpha = _parse_complex(raw["alpha"], "alpha")
        beta = _parse_complex(raw["beta"], "beta")
        gamma = _parse_complex(raw["gamma"], "gamma")
    else:
        raise ValueError("initial state missing: pass --state a,b,c or a config file")

    t_max = args.t_max if args.t_max is not None else raw.get("t_max", 100)
    if int(t_max) != t_max or int(t_max) < 0:
        raise ValueError(f"t_max must be a non-negative integer, got {t_max!r}")

    fmt = args.format if args.format is not None else raw.get("format")
    tolerance = args.tolerance if args.tolerance is not None else raw.get("tolerance", 0.01)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    window = args.window if args.window is not None else raw.get("window", 10)
    if int(window) != window or int(window) < 1:
        raise ValueError(f"window must be a positive integer, got {window!r}")
    out = args.out if args.out is not None else raw.get("output_path")

    return RunConfig(
        theta=float(theta),
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        t_max=int(t_max),
        output_path=out,
        fmt=fmt if fmt is not None else "csv",
        tolerance=float(tolerance),
        window=int(window),
        indices=bool(args.indices or raw.get("indices", False)),
        preset=preset,
    )


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ValueError(f"cannot write {path!r}: {exc}") from exc


def _fmt(v: float) -> str:
    return f"{v:.12e}"


def _complex_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def cmd_simulate(config: RunConfig) -> int:
    """Write the per-site distribution at t_max, in physical coordinates.

    Rows carry (px, py, prob) sorted by (px, py); with ``indices`` enabled
    the columns are the integer site labels (sub, x, y, prob) instead.
    """
    params = config.coin_params()
    state = config.coin_state()
    dist = distribution(evolve(state, config.t_max, build_coin(params)))

    rows = []
    for (x, y), p in zip(dist.xy, dist.values):
        site = Site(dist.sublattice, int(x), int(y))
        if config.indices:
            rows.append((site.sub, int(x), int(y), float(p)))
        else:
            point = to_physical(site)
            rows.append((point.px, point.py, float(p)))

    if config.fmt == "csv":
        if config.indices:
            lines = ["sub,x,y,prob"]
            lines += [f"{r[0]},{r[1]},{r[2]},{_fmt(r[3])}" for r in rows]
        else:
            lines = ["px,py,prob"]
            lines += [f"{_fmt(r[0])},{_fmt(r[1])},{_fmt(r[2])}" for r in rows]
        _emit("\n".join(lines) + "\n", config.output_path)
    elif config.fmt == "json":
        payload = {
            "command": "simulate",
            "theta": params.theta,
            "state": [
                _complex_pair(state.alpha),
                _complex_pair(state.beta),
                _complex_pair(state.gamma),
            ],
            "t": config.t_max,
            "columns": ["sub", "x", "y", "prob"] if config.indices else ["px", "py", "prob"],
            "rows": [list(r) for r in rows],
        }
        _emit(json.dumps(payload, indent=2) + "\n", config.output_path)
    else:
        raise ValueError(f"unsupported format {config.fmt!r} for simulate")
    return EXIT_OK


def cmd_return_series(config: RunConfig) -> int:
    """Write (t, p_origin, limit) for even times up to t_max.

    The limit column is the constant closed-form long-time value, repeated
    on every row so the file plots directly against the series.
    """
    params = config.coin_params()
    state = config.coin_state()
    limit_value = limit_return_probability(params, state)

    coin = build_coin(params)
    wf = initial_wavefunction(state)
    origin = Site.a(0, 0)
    rows = [(0, float(np.sum(np.abs(wf.amplitude(origin)) ** 2)), limit_value)]
    for t in range(1, config.t_max + 1):
        wf = step(wf, coin)
        if t % 2 == 0:
            p = float(np.sum(np.abs(wf.amplitude(origin)) ** 2))
            rows.append((t, p, limit_value))

    if config.fmt == "csv":
        lines = ["t,p_origin,limit"]
        lines += [f"{t},{_fmt(p)},{_fmt(lim)}" for t, p, lim in rows]
        _emit("\n".join(lines) + "\n", config.output_path)
    elif config.fmt == "json":
        payload = {
            "command": "return-series",
            "theta": params.theta,
            "state": [
                _complex_pair(state.alpha),
                _complex_pair(state.beta),
                _complex_pair(state.gamma),
            ],
            "t_max": config.t_max,
            "columns": ["t", "p_origin", "limit"],
            "rows": [list(r) for r in rows],
        }
        _emit(json.dumps(payload, indent=2) + "\n", config.output_path)
    else:
        raise ValueError(f"unsupported format {config.fmt!r} for return-series")
    return EXIT_OK


def _limit_payload(config: RunConfig) -> dict:
    params = config.coin_params()
    state = config.coin_state()
    amp = asymptotic_origin_amplitude(params, state)
    return {
        "command": "limit",
        "theta": params.theta,
        "A": a_theta(params),
        "limit": limit_return_probability(params, state),
        "delta": delta_weight(params, state),
        "delocalized": delocalization_condition(params, state),
        "origin_amplitude": [
            _complex_pair(amp.psi0),
            _complex_pair(amp.psi1),
            _complex_pair(amp.psi2),
        ],
    }


def cmd_limit(config: RunConfig) -> int:
    """Report the closed-form long-time quantities for one configuration."""
    payload = _limit_payload(config)
    if config.fmt == "json":
        _emit(json.dumps(payload, indent=2) + "\n", config.output_path)
    elif config.fmt in ("text", "csv"):
        if config.fmt == "csv":
            raise ValueError("limit emits a report, not a table; use --format json")
        lines = [
            f"theta        = {payload['theta']:.12g}",
            f"A(theta)     = {payload['A']:.12g}",
            f"limit        = {payload['limit']:.12g}",
            f"delta        = {payload['delta']:.12g}",
            f"delocalized  = {'yes' if payload['delocalized'] else 'no'}",
            "origin amplitude:",
        ]
        for label, pair in zip(("psi0", "psi1", "psi2"), payload["origin_amplitude"]):
            lines.append(f"  {label} = {pair[0]:+.12g} {pair[1]:+.12g}i")
        _emit("\n".join(lines) + "\n", config.output_path)
    else:
        raise ValueError(f"unsupported format {config.fmt!r} for limit")
    return EXIT_OK


def cmd_compare(config: RunConfig) -> int:
    """Check a finite-time run against the closed-form origin limits.

    Evolves to t_max, averages the origin probability and the complex
    origin amplitude over the last ``window`` even times, and compares
    them with the long-time formulas.  PASS requires every reported
    absolute error to stay within the tolerance; FAIL exits with code 3.
    """
    params = config.coin_params()
    state = config.coin_state()
    coin = build_coin(params)
    origin = Site.a(0, 0)

    even_times = [t for t in range(0, config.t_max + 1, 2)]
    window_times = set(even_times[-config.window:])

    wf = initial_wavefunction(state)
    amps = {}
    if 0 in window_times:
        amps[0] = wf.amplitude(origin)
    for t in range(1, config.t_max + 1):
        wf = step(wf, coin)
        if t in window_times:
            amps[t] = wf.amplitude(origin)

    sampled = np.array([amps[t] for t in sorted(amps)], dtype=np.complex128)
    p_mean = float(np.mean(np.sum(np.abs(sampled) ** 2, axis=1)))
    amp_mean = sampled.mean(axis=0)

    limit_value = limit_return_probability(params, state)
    predicted = asymptotic_origin_amplitude(params, state).as_array()
    p_error = abs(p_mean - limit_value)
    amp_errors = np.abs(amp_mean - predicted)
    passed = p_error <= config.tolerance and float(amp_errors.max()) <= config.tolerance

    payload = {
        "command": "compare",
        "theta": params.theta,
        "t_max": config.t_max,
        "window": config.window,
        "tolerance": config.tolerance,
        "limit": limit_value,
        "p_origin_mean": p_mean,
        "p_abs_error": p_error,
        "amplitude_abs_error": [float(e) for e in amp_errors],
        "simulated_origin_amplitude": [_complex_pair(z) for z in amp_mean],
        "predicted_origin_amplitude": [_complex_pair(z) for z in predicted],
        "status": "PASS" if passed else "FAIL",
    }
    if config.fmt == "json":
        _emit(json.dumps(payload, indent=2) + "\n", config.output_path)
    else:
        lines = [
            f"t_max      = {config.t_max}, window = {config.window} even steps",
            f"limit      = {limit_value:.12g}",
            f"p_mean     = {p_mean:.12g}   |error| = {p_error:.3e}",
            "amplitude |error| = "
            + ", ".join(f"{e:.3e}" for e in payload["amplitude_abs_error"]),
            f"status     = {payload['status']} (tolerance {config.tolerance:g})",
        ]
        _emit("\n".join(lines) + "\n", config.output_path)
    return EXIT_OK if passed else EXIT_COMPARISON_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexwalk",
        description="Three-state quantum walk on the honeycomb lattice",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("simulate", "site distribution at a fixed time"),
        ("return-series", "origin probability at even times"),
        ("limit", "closed-form long-time quantities"),
        ("compare", "finite-time run vs the limit laws"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--theta", type=float, default=None, help="coin angle in radians")
        p.add_argument(
            "--preset", choices=("grover",), default=None,
            help="named coin preset (grover: c = -1/3)",
        )
        p.add_argument(
            "--state", default=None, metavar="A,B,C",
            help="real initial coin amplitudes, comma separated",
        )
        p.add_argument("--config", default=None, help="JSON config file")
        p.add_argument("--t-max", dest="t_max", type=int, default=None,
                       help="number of walk steps (default 100)")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json", "text"), default=None,
                       help="output format")
        p.add_argument("--tolerance", type=float, default=None,
                       help="comparison tolerance (compare; default 0.01)")
        p.add_argument("--window", type=int, default=None,
                       help="even-step averaging window (compare; default 10)")
        p.add_argument("--indices", action="store_true",
                       help="export integer site indices instead of coordinates")
    return parser


_COMMANDS = {
    "simulate": cmd_simulate,
    "return-series": cmd_return_series,
    "limit": cmd_limit,
    "compare": cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    try:
        return _COMMANDS[args.command](config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (QuadratureError, FloatingPointError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
