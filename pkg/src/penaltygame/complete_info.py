"""Equilibrium of the proposal game when both types are common knowledge.

Backward induction in two moves. The responder accepts an advance exactly
when accepting beats refusing:

    k*theta_m - theta_w >= -theta_m        <=>   theta_w <= (1+k)*theta_m

(indifference accepts). The proposer advances exactly when she would accept
AND the advance leaves him weakly ahead of staying quiet:

    G - lam*theta_w >= 0                   <=>   theta_w <= G/lam

so an advance happens iff theta_w <= min((1+k)*theta_m, G/lam), with the
convention G/0 = +inf. A refused advance never occurs on the equilibrium
path: the proposer only moves when acceptance follows.

Two penalty thresholds organize everything downstream. Deterrence starts to
bind once lam exceeds lambda_pc = G/((1+k)M) (the sanction cap G/lam drops
below the highest acceptance cutoff) and the last interaction that harms the
responder is priced out at lambda_pi = G/(kM).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    AgentTypes,
    EquilibriumOutcome,
    ModelParams,
    OutcomePath,
    ParetoClass,
    PayoffPair,
    classify_pareto,
    payoff_accept,
)


@dataclass(frozen=True)
class Thresholds:
    lambda_pc: float
    lambda_pi: float


def thresholds(p: ModelParams) -> Thresholds:
    """Penalty levels where the equilibrium regions change shape."""
    return Thresholds(
        lambda_pc=p.G / ((1 + p.k) * p.M),
        lambda_pi=p.G / (p.k * p.M),
    )


def proposal_cutoff(p: ModelParams, theta_m: float, lam: float) -> float:
    """Highest responder type this proposer type advances toward."""
    cap = math.inf if lam == 0 else p.G / lam
    return min((1 + p.k) * theta_m, cap)


def equilibrium_outcome(p: ModelParams, t: AgentTypes, lam: float) -> EquilibriumOutcome:
    if t.theta_w <= proposal_cutoff(p, t.theta_m, lam):
        return EquilibriumOutcome(
            path=OutcomePath.PROPOSAL_ACCEPTED,
            payoffs=payoff_accept(p, t, lam),
        )
    return EquilibriumOutcome(path=OutcomePath.NO_PROPOSAL, payoffs=PayoffPair(0.0, 0.0))


def classify_interaction(p: ModelParams, t: AgentTypes, lam: float) -> ParetoClass:
    """Pareto category of the realized equilibrium outcome for one type pair."""
    return classify_pareto(equilibrium_outcome(p, t, lam))


@dataclass(frozen=True)
class RegionMap:
    """Pareto category sampled at the centers of a resolution^2 type grid."""

    resolution: int
    lam: float
    cells: tuple[tuple[float, float, ParetoClass], ...]

    def counts(self) -> dict[str, int]:
        out = {"PN": 0, "PI": 0, "PC": 0, "PD": 0}
        for _, _, cls in self.cells:
            out[cls.code] += 1
        return out

    def to_csv_text(self) -> str:
        lines = ["theta_m,theta_w,class"]
        for theta_m, theta_w, cls in self.cells:
            lines.append(f"{theta_m!r},{theta_w!r},{cls.code}")
        return "\n".join(lines) + "\n"


def region_map(p: ModelParams, lam: float, resolution: int) -> RegionMap:
    """Classify every grid cell from its realized payoffs.

    Classification always goes through the equilibrium outcome, never
    through closed-form region boundaries, so the map stays truthful even
    where boundary formulas would disagree by a half cell. Cell centers:
    theta_m = (i + 1/2) * M / resolution, theta_w = (j + 1/2) / resolution,
    emitted row-major (theta_m outer, theta_w inner).
    """
    if resolution < 2:
        raise ValueError(f"resolution = {resolution} must be >= 2")
    cells = []
    for i in range(resolution):
        theta_m = (i + 0.5) * p.M / resolution
        for j in range(resolution):
            theta_w = (j + 0.5) / resolution
            cls = classify_interaction(p, AgentTypes(theta_m, theta_w), lam)
            cells.append((theta_m, theta_w, cls))
    return RegionMap(resolution=resolution, lam=lam, cells=tuple(cells))
