"""Strict JSON run-configuration loading for the command-line tools.

A run configuration is a single JSON object:

    {
      "params": {"G": 1.0, "k": 2.0, "M": 0.3, "mu": 0.5, "alpha": 1.0},
      "regime": "complete",
      "lambda_grid": {"min": 0.0, "max": 5.0, "step": 0.01},
      "resolution": 200,
      "monte_carlo": {"n": 1000000, "seed": 42, "batches": 1},
      "out_dir": "out"
    }

Only params.G, params.k and params.M are required; everything else takes
the defaults shown above. Unknown fields anywhere in the document are
rejected outright rather than ignored, so a typo like "lamda_grid" fails
fast instead of silently running with defaults.

Structural problems (unreadable file, bad JSON, wrong types, unknown
fields, inverted or non-positive grids) raise ConfigError. Violations of
the model assumptions are deliberately not checked here: the command line
reports those through validate_params so parse failures and domain
failures get distinct exit codes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .core import ModelParams
from .oracles import McConfig


class ConfigError(ValueError):
    """A configuration document is unreadable, malformed, or ill-typed."""


@dataclass(frozen=True)
class LambdaGrid:
    """Closed penalty grid [min, max] swept in increments of step."""

    min: float
    max: float
    step: float


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams
    regime: str
    lambda_grid: LambdaGrid
    resolution: int
    monte_carlo: McConfig
    out_dir: str


_DEFAULT_GRID = LambdaGrid(min=0.0, max=5.0, step=0.01)
_DEFAULT_RESOLUTION = 200


def _as_mapping(node, where: str) -> dict:
    if not isinstance(node, dict):
        raise ConfigError(f"{where} must be a JSON object")
    return node


def _as_number(node, where: str) -> float:
    if isinstance(node, bool) or not isinstance(node, (int, float)):
        raise ConfigError(f"{where} must be a number")
    return float(node)


def _as_int(node, where: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise ConfigError(f"{where} must be an integer")
    return node


def _reject_unknown(node: dict, allowed: tuple[str, ...], where: str) -> None:
    unknown = sorted(set(node) - set(allowed))
    if unknown:
        raise ConfigError(f"unknown field(s) in {where}: {', '.join(unknown)}")


def _parse_params(raw) -> ModelParams:
    node = _as_mapping(raw, "params")
    _reject_unknown(node, ("G", "k", "M", "mu", "alpha"), "params")
    for key in ("G", "k", "M"):
        if key not in node:
            raise ConfigError(f"params is missing required field '{key}'")
    return ModelParams(
        G=_as_number(node["G"], "params.G"),
        k=_as_number(node["k"], "params.k"),
        M=_as_number(node["M"], "params.M"),
        mu=_as_number(node["mu"], "params.mu") if "mu" in node else 0.5,
        alpha=_as_number(node["alpha"], "params.alpha") if "alpha" in node else 1.0,
    )


def _parse_grid(raw) -> LambdaGrid:
    node = _as_mapping(raw, "lambda_grid")
    _reject_unknown(node, ("min", "max", "step"), "lambda_grid")
    for key in ("min", "max", "step"):
        if key not in node:
            raise ConfigError(f"lambda_grid is missing required field '{key}'")
    grid = LambdaGrid(
        min=_as_number(node["min"], "lambda_grid.min"),
        max=_as_number(node["max"], "lambda_grid.max"),
        step=_as_number(node["step"], "lambda_grid.step"),
    )
    for key in ("min", "max", "step"):
        if not math.isfinite(getattr(grid, key)):
            raise ConfigError(f"lambda_grid.{key} must be finite")
    if grid.min < 0:
        raise ConfigError(f"lambda_grid.min = {grid.min:g} must be >= 0")
    if grid.min > grid.max:
        raise ConfigError(
            f"lambda_grid.min = {grid.min:g} exceeds lambda_grid.max = {grid.max:g}"
        )
    if grid.step <= 0:
        raise ConfigError(f"lambda_grid.step = {grid.step:g} must be > 0")
    return grid


def _parse_monte_carlo(raw) -> McConfig:
    node = _as_mapping(raw, "monte_carlo")
    _reject_unknown(node, ("n", "seed", "batches"), "monte_carlo")
    mc = McConfig(
        n=_as_int(node["n"], "monte_carlo.n") if "n" in node else 1_000_000,
        seed=_as_int(node["seed"], "monte_carlo.seed") if "seed" in node else 42,
        batches=_as_int(node["batches"], "monte_carlo.batches") if "batches" in node else 1,
    )
    if mc.n < 1:
        raise ConfigError(f"monte_carlo.n = {mc.n} must be >= 1")
    if not 0 <= mc.seed < 2**64:
        raise ConfigError("monte_carlo.seed must fit an unsigned 64-bit integer")
    if mc.batches < 1:
        raise ConfigError(f"monte_carlo.batches = {mc.batches} must be >= 1")
    return mc


def parse_config(doc) -> RunConfig:
    top = _as_mapping(doc, "config")
    _reject_unknown(
        top,
        ("params", "regime", "lambda_grid", "resolution", "monte_carlo", "out_dir"),
        "config",
    )
    if "params" not in top:
        raise ConfigError("config is missing required field 'params'")

    regime = top.get("regime", "complete")
    if regime not in ("complete", "private"):
        raise ConfigError(f"regime must be 'complete' or 'private', got {regime!r}")

    resolution = (
        _as_int(top["resolution"], "resolution") if "resolution" in top else _DEFAULT_RESOLUTION
    )
    if resolution < 2:
        raise ConfigError(f"resolution = {resolution} must be >= 2")

    out_dir = top.get("out_dir", "out")
    if not isinstance(out_dir, str):
        raise ConfigError("out_dir must be a string")

    return RunConfig(
        params=_parse_params(top["params"]),
        regime=regime,
        lambda_grid=_parse_grid(top["lambda_grid"]) if "lambda_grid" in top else _DEFAULT_GRID,
        resolution=resolution,
        monte_carlo=_parse_monte_carlo(top["monte_carlo"]) if "monte_carlo" in top else McConfig(),
        out_dir=out_dir,
    )


def load_config(path) -> RunConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return parse_config(doc)
