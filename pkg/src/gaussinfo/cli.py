"""Command-line front end: parameter sweeps, triangle documents, oracle checks.

Exit codes: 0 on success, 1 on usage errors, 2 on validation or numerical
failures (including oracle disagreement and truncation refusals).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .entropy import LN2, thermal_entropy
from .exceptions import GaussInfoError
from .fock import beamsplitter_attenuate, partial_trace, tmsv_fock, vn_entropy_fock
from .triangle import info_triangle

CSV_HEADER = "k,H_in,H_out,H_exch,I,L,N_noise,coherent"

# Closed-form vs oracle agreement required by the verify command.
ORACLE_TOL = 2e-3

# Truncated weight allowed when building oracle states.
ORACLE_MAX_DEFICIT = 1e-8

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class UsageError(ValueError):
    """Bad flag combinations detected after parsing."""


@dataclass(frozen=True)
class SweepConfig:
    """Validated parameters of a sweep over the channel coefficient."""

    n_input: float
    k_min: float
    k_max: float
    steps: int
    base: str
    hbar: float

    def __post_init__(self):
        if self.n_input < 0:
            raise UsageError(f"--N must be nonnegative, got {self.n_input!r}")
        if not (0 < self.k_min < self.k_max):
            raise UsageError(
                f"need 0 < --k-min < --k-max, got {self.k_min!r} and {self.k_max!r}"
            )
        if self.steps < 2:
            raise UsageError(f"--steps must be at least 2, got {self.steps!r}")
        if self.hbar <= 0:
            raise UsageError(f"--hbar must be positive, got {self.hbar!r}")
        if self.base not in ("nats", "bits"):
            raise UsageError(f"unknown base {self.base!r}")

    def grid(self) -> np.ndarray:
        return np.linspace(self.k_min, self.k_max, self.steps)


def _fmt(x: float) -> str:
    return format(float(x) + 0.0, ".12g")


def sweep_rows(cfg: SweepConfig) -> list[dict]:
    """Triangle quantities per grid point, already converted to the requested base."""
    factor = 1.0 if cfg.base == "nats" else 1.0 / LN2
    rows = []
    for k in cfg.grid():
        tri = info_triangle(cfg.n_input, float(k), cfg.hbar)
        rows.append(
            {
                "k": float(k),
                "H_in": tri.h_in.nats * factor,
                "H_out": tri.h_out.nats * factor,
                "H_exch": tri.h_exch.nats * factor,
                "I": tri.mutual * factor,
                "L": tri.loss * factor,
                "N_noise": tri.noise * factor,
                "coherent": tri.coherent * factor,
            }
        )
    return rows


def render_sweep_csv(rows: list[dict]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                _fmt(r[c])
                for c in ("k", "H_in", "H_out", "H_exch", "I", "L", "N_noise", "coherent")
            )
        )
    return "\n".join(lines) + "\n"


VERIFY_HEADER = "k,H_out_closed,H_out_oracle,err_out,H_exch_closed,H_exch_oracle,err_exch,status"


def verify_rows(n_input: float, k_values, dim: int) -> list[dict]:
    """Compare the closed-form output entropy and entropy exchange to the Fock oracle."""
    rows = []
    for k in k_values:
        k = float(k)
        k2 = k * k
        closed_out = thermal_entropy(k2 * n_input)
        closed_exch = thermal_entropy((1.0 - k2) * n_input)
        row = {"k": k, "H_out_closed": closed_out, "H_exch_closed": closed_exch}
        try:
            rho12 = tmsv_fock(n_input, dim, max_deficit=ORACLE_MAX_DEFICIT)
            joint = beamsplitter_attenuate(rho12, k)
            oracle_exch = vn_entropy_fock(joint)
            oracle_out = vn_entropy_fock(partial_trace(joint, 0))
        except GaussInfoError as exc:
            row.update(
                H_out_oracle=None, err_out=None, H_exch_oracle=None, err_exch=None,
                status=f"truncation-error: {exc}",
            )
            rows.append(row)
            continue
        err_out = abs(oracle_out - closed_out)
        err_exch = abs(oracle_exch - closed_exch)
        status = "ok" if max(err_out, err_exch) <= ORACLE_TOL else "fail"
        row.update(
            H_out_oracle=oracle_out, err_out=err_out,
            H_exch_oracle=oracle_exch, err_exch=err_exch, status=status,
        )
        rows.append(row)
    return rows


def render_verify_table(rows: list[dict], base: str) -> str:
    factor = 1.0 if base == "nats" else 1.0 / LN2
    lines = [VERIFY_HEADER]
    for r in rows:
        cells = [_fmt(r["k"])]
        for key in ("H_out_closed", "H_out_oracle", "err_out", "H_exch_closed", "H_exch_oracle", "err_exch"):
            value = r[key]
            cells.append("" if value is None else _fmt(value * factor))
        cells.append(r["status"].split(":")[0])
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussinfo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_k_range, k_range_defaults, steps_default):
        p.add_argument("--N", type=float, default=1.0, help="input mean occupation")
        if with_k_range:
            p.add_argument("--k-min", type=float, default=k_range_defaults[0])
            p.add_argument("--k-max", type=float, default=k_range_defaults[1])
            p.add_argument("--steps", type=int, default=steps_default)
        p.add_argument("--hbar", type=float, default=1.0)
        p.add_argument("--bits", action="store_true", help="report entropies in bits")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--plot", default=None, metavar="DIR", help="also render figures into DIR")

    p_sweep = sub.add_parser("sweep", help="CSV of triangle quantities over a k grid")
    common(p_sweep, True, (0.01, 3.0), 300)

    p_tri = sub.add_parser("triangle", help="JSON triangle document for one (N, k) point")
    common(p_tri, False, None, None)
    p_tri.add_argument("--k", type=float, default=1.0, help="channel coefficient")

    p_verify = sub.add_parser("verify", help="closed forms vs truncated Fock oracle")
    common(p_verify, True, (0.3, 0.9), 4)
    p_verify.add_argument("--dim", type=int, default=60, help="Fock truncation dimension per mode")
    return parser


def _write(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)


def _cmd_sweep(args) -> int:
    cfg = SweepConfig(
        n_input=args.N, k_min=args.k_min, k_max=args.k_max, steps=args.steps,
        base="bits" if args.bits else "nats", hbar=args.hbar,
    )
    rows = sweep_rows(cfg)
    _write(render_sweep_csv(rows), args.out)
    if args.plot is not None:
        from .plots import render_sweep_figures

        render_sweep_figures(rows, cfg.n_input, cfg.base, args.plot)
    return EXIT_OK


def _cmd_triangle(args) -> int:
    if args.N < 0:
        raise UsageError(f"--N must be nonnegative, got {args.N!r}")
    if args.k <= 0:
        raise UsageError(f"--k must be positive, got {args.k!r}")
    if args.hbar <= 0:
        raise UsageError(f"--hbar must be positive, got {args.hbar!r}")
    doc = info_triangle(args.N, args.k, args.hbar).to_dict("bits" if args.bits else "nats")
    _write(json.dumps(doc, indent=2) + "\n", args.out)
    if args.plot is not None:
        from .plots import render_triangle_figure

        render_triangle_figure(doc, args.plot)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.N < 0:
        raise UsageError(f"--N must be nonnegative, got {args.N!r}")
    if args.dim < 2:
        raise UsageError(f"--dim must be at least 2, got {args.dim!r}")
    if not (0 < args.k_min <= args.k_max < 1):
        raise UsageError(
            f"oracle runs need 0 < --k-min <= --k-max < 1, got {args.k_min!r} and {args.k_max!r}"
        )
    if args.steps < 1:
        raise UsageError(f"--steps must be at least 1, got {args.steps!r}")
    if args.k_min == args.k_max:
        k_values = [args.k_min]
    else:
        k_values = [float(k) for k in np.linspace(args.k_min, args.k_max, max(args.steps, 2))]
    rows = verify_rows(args.N, k_values, args.dim)
    _write(render_verify_table(rows, "bits" if args.bits else "nats"), args.out)
    if all(r["status"] == "ok" for r in rows):
        return EXIT_OK
    bad = sum(r["status"] != "ok" for r in rows)
    print(f"verify: {bad} of {len(rows)} rows outside tolerance {ORACLE_TOL:g}", file=sys.stderr)
    return EXIT_FAILURE


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "triangle":
            return _cmd_triangle(args)
        return _cmd_verify(args)
    except UsageError as exc:
        print(f"gaussinfo: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GaussInfoError, ValueError) as exc:
        print(f"gaussinfo: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
