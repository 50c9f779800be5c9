"""Command-line front end for sweeps, tables, and the verification report.

Five subcommands: validate (assumption check), region-map (interaction
categories over the type rectangle), curves (welfare and consent sweeps
over a penalty grid), optimal (penalty table under every approach), and
verify (closed forms against the numerical oracles).

Exit codes: 0 success, 1 domain or verification failure, 2 I/O or parse
failure, including a malformed configuration.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from pathlib import Path

from . import complete_info, tables
from .config import ConfigError, RunConfig, load_config
from .core import validate_params
from .verify import verify_report


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penaltygame",
        description=(
            "Equilibrium, welfare, and consent analysis of a proposal game "
            "under a rejection penalty."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument(
            "--config", required=True, help="path to a JSON run configuration"
        )
        sp.add_argument("--out", help="output directory, overriding the configured one")
        sp.add_argument(
            "--seed", type=int, help="Monte Carlo seed, overriding the configured one"
        )
        return sp

    add("validate", "check the configured parameters against the model assumptions")
    sp = add("region-map", "classify the type rectangle into interaction categories")
    sp.add_argument(
        "--lambda", dest="lam", type=float, required=True, help="penalty level"
    )
    add("curves", "sweep the penalty grid and write welfare and consent curves")
    add("optimal", "tabulate optimal penalties under every approach")
    add("verify", "cross-check every closed form against the numerical oracles")
    return parser


def _write(out_dir: str, name: str, text: str) -> Path:
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / name
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")
    return path


def _cmd_region_map(cfg: RunConfig, lam: float) -> int:
    if cfg.regime != "complete":
        print("error: region-map requires regime = 'complete'", file=sys.stderr)
        return 1
    if not (math.isfinite(lam) and lam >= 0):
        print(f"error: --lambda must be a finite penalty >= 0, got {lam}", file=sys.stderr)
        return 1
    grid = complete_info.region_map(cfg.params, lam, cfg.resolution)
    _write(cfg.out_dir, "region_map.csv", grid.to_csv_text())
    return 0


def _cmd_curves(cfg: RunConfig) -> int:
    lams = tables.penalty_grid(cfg.lambda_grid)
    if cfg.regime == "complete":
        _write(
            cfg.out_dir,
            "welfare_curves.csv",
            tables.csv_text(tables.WELFARE_HEADER, tables.welfare_rows(cfg.params, lams)),
        )
        _write(
            cfg.out_dir,
            "consent_curves.csv",
            tables.csv_text(tables.CONSENT_HEADER, tables.consent_rows(cfg.params, lams)),
        )
    else:
        _write(
            cfg.out_dir,
            "private_curves.csv",
            tables.csv_text(tables.PRIVATE_HEADER, tables.private_rows(cfg.params, lams)),
        )
    return 0


def _cmd_optimal(cfg: RunConfig) -> int:
    rows = tables.optimal_rows(cfg.params)
    _write(cfg.out_dir, "optimal_penalties.csv", tables.csv_text(tables.OPTIMAL_HEADER, rows))
    print(tables.table_text(tables.OPTIMAL_HEADER, rows), end="")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    report = verify_report(cfg.params, cfg.monte_carlo)
    _write(cfg.out_dir, "verify_report.json", report.to_json_text())
    _write(cfg.out_dir, "verify_report.txt", report.to_table_text())
    print(report.to_table_text(), end="")
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.seed is not None:
        if not 0 <= args.seed < 2**64:
            print("error: --seed must fit an unsigned 64-bit integer", file=sys.stderr)
            return 2
        cfg = dataclasses.replace(
            cfg, monte_carlo=dataclasses.replace(cfg.monte_carlo, seed=args.seed)
        )
    if args.out is not None:
        cfg = dataclasses.replace(cfg, out_dir=args.out)

    violations = validate_params(cfg.params)
    if args.command == "validate":
        for message in violations:
            print(message)
        if violations:
            return 1
        print("params OK")
        return 0
    # verify embeds violations in its own report; the others stop here
    if violations and args.command != "verify":
        for message in violations:
            print(message, file=sys.stderr)
        return 1

    try:
        if args.command == "region-map":
            return _cmd_region_map(cfg, args.lam)
        if args.command == "curves":
            return _cmd_curves(cfg)
        if args.command == "optimal":
            return _cmd_optimal(cfg)
        return _cmd_verify(cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
