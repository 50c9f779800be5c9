"""Figure-data row builders and deterministic CSV emission.

Numeric CSV cells are written with repr, the shortest string that
round-trips to the same float, so output is byte-for-byte deterministic
for a fixed configuration. Console rendering of the same rows uses 9
significant digits, which agrees with the CSV at that precision because
both render the identical float.
"""

from __future__ import annotations

import math

import numpy as np

from . import consent, private_info, welfare
from .config import LambdaGrid
from .core import DomainError, ModelParams
from .oracles import _closed_grid
from .welfare import FormulaVariant

WELFARE_HEADER = "lambda,pi_w,pi_m,pi_social"
CONSENT_HEADER = "lambda,phi_pi,phi_pc,consent_value"
PRIVATE_HEADER = "lambda,e_pi_w,e_pi_m,e_pi_social,phi_pi,phi_pc,consent_value"
OPTIMAL_HEADER = "regime,quantity,value"


def penalty_grid(grid: LambdaGrid) -> np.ndarray:
    """Penalty values swept by the curves subcommand (min == max is one point)."""
    return _closed_grid(grid.min, grid.max, grid.step)


def welfare_rows(p: ModelParams, lams: np.ndarray) -> list[tuple[float, ...]]:
    pi_w = welfare.woman_welfare(p, lams)
    pi_m = welfare.man_welfare(p, lams)
    pi_s = p.mu * pi_m + (1.0 - p.mu) * pi_w
    return [tuple(map(float, row)) for row in zip(lams, pi_w, pi_m, pi_s)]


def consent_rows(p: ModelParams, lams: np.ndarray) -> list[tuple[float, ...]]:
    phi_pi, phi_pc = consent._phi_arrays(p, np.asarray(lams, dtype=float))
    value = consent.LinearConsent(p.alpha)(phi_pi, phi_pc, np.zeros_like(phi_pi))
    return [tuple(map(float, row)) for row in zip(lams, phi_pi, phi_pc, value)]


def private_rows(p: ModelParams, lams: np.ndarray) -> list[tuple[float, ...]]:
    lams = np.asarray(lams, dtype=float)
    e_w = private_info.expected_welfare_woman(p, lams)
    e_m = private_info.expected_welfare_man(p, lams)
    e_s = p.mu * e_m + (1.0 - p.mu) * e_w
    live = lams < private_info.deterrence_penalty(p)
    phi_pi = np.where(live, p.k * p.M / 2.0, 0.0)
    phi_pc = np.where(live, (2.0 - p.k * p.M) / 2.0, 0.0)
    value = consent.LinearConsent(p.alpha)(phi_pi, phi_pc, np.zeros_like(phi_pi))
    return [
        tuple(map(float, row))
        for row in zip(lams, e_w, e_m, e_s, phi_pi, phi_pc, value)
    ]


def optimal_rows(p: ModelParams) -> list[tuple[str, str, float]]:
    """Every optimal penalty plus the critical gratification thresholds.

    The consent-optimal entry needs the linear objective weight in (0, 1];
    outside that range the objective fails the marginal-effects axiom and
    the entry is reported as nan rather than a number nothing supports.
    """
    try:
        consent_opt = consent.consent_optimal_penalty(p)
    except DomainError:
        consent_opt = math.nan
    return [
        ("complete", "woman-optimal", welfare.woman_optimal_penalty(p)),
        ("complete", "welfare-optimal", welfare.welfare_optimal_penalty(p).penalty),
        ("complete", "consent-optimal", consent_opt),
        ("private", "woman-optimal", private_info.woman_optimal_penalty(p)),
        ("private", "welfare-optimal", private_info.welfare_optimal_penalty(p).penalty),
        ("private", "consent-optimal-minimum", private_info.deterrence_penalty(p)),
        (
            "complete",
            "critical-gratification-as-printed",
            welfare.critical_gratification(p, FormulaVariant.AS_PRINTED),
        ),
        (
            "complete",
            "critical-gratification-rederived",
            welfare.critical_gratification(p, FormulaVariant.REDERIVED),
        ),
        ("private", "critical-gratification", private_info.critical_gratification(p)),
    ]


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return repr(float(value))


def csv_text(header: str, rows) -> str:
    lines = [header]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def table_text(header: str, rows) -> str:
    rendered = [header.split(",")]
    for row in rows:
        rendered.append(
            [v if isinstance(v, str) else f"{float(v):.9g}" for v in row]
        )
    widths = [max(len(r[i]) for r in rendered) for i in range(len(rendered[0]))]
    lines = []
    for idx, r in enumerate(rendered):
        lines.append("  ".join(s.ljust(w) for s, w in zip(r, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
