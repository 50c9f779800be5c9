"""Primitive types and payoffs for the proposal game.

Two agents interact once. The proposer (m, "man") enjoys gratification ``G``
from an accepted advance; the responder (w, "woman") weighs the proposer's
appeal against her own distaste for the advance. Types are scaled so that
``theta_m`` lies in ``[0, M]`` and ``theta_w`` in ``[0, 1]``, both uniform.

Realized payoffs, with penalty rate ``lam >= 0``:

    accepted advance:   u_m = G - lam*theta_w      u_w = k*theta_m - theta_w
    rejected advance:   u_m = -lam*theta_w         u_w = -theta_m
    no advance:         u_m = 0                    u_w = 0

Making an advance toward a responder of type ``theta_w`` exposes the
proposer to the sanction ``lam * theta_w`` whether or not she accepts: the
sanction is graduated in the harm actually at stake, not flat. A rejected
advance still costs the responder ``theta_m`` (the burden of fending it
off grows with the proposer's standing).

Parameter domain ("valid params" everywhere downstream), stated as two
named assumptions plus two weight ranges:

    A1 (positive stakes):   G > 0,  k > 0,  0 < M < 1
    A2 (refusal margin):    (1 + k) * M < 1
    mu-range:               0 < mu < 1
    alpha:                  finite (further limits are imposed where used)

A2 guarantees that some responder types refuse every advance, which keeps
every integral below well inside the unit square.
``mu`` is the planner's weight on the proposer side in social welfare, and
``alpha`` is the relative weight a consent-based planner puts on mutually
improving interactions (only ``alpha <= 1`` is admissible there; see
:mod:`penaltygame.consent`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple


class DomainError(ValueError):
    """Inputs left the model's parameter domain."""


class ParetoClass(enum.Enum):
    """Welfare category of one realized interaction.

    NEUTRAL      nothing happened (or both payoffs are exactly zero)
    IMPROVING    both sides weakly gain, the proposer strictly
    CONFLICTING  one side gains while the other loses
    DOMINATED    both sides lose
    """

    NEUTRAL = "PN"
    IMPROVING = "PI"
    CONFLICTING = "PC"
    DOMINATED = "PD"

    @property
    def code(self) -> str:
        return self.value


class OutcomePath(enum.Enum):
    NO_PROPOSAL = "no_proposal"
    PROPOSAL_ACCEPTED = "proposal_accepted"
    PROPOSAL_REJECTED = "proposal_rejected"


class PayoffPair(NamedTuple):
    u_m: float
    u_w: float


@dataclass(frozen=True)
class ModelParams:
    """Primitive parameters. Construction never validates; see validate_params."""

    G: float
    k: float
    M: float
    mu: float = 0.5
    alpha: float = 1.0


@dataclass(frozen=True)
class AgentTypes:
    """One realized type draw: theta_m in [0, M], theta_w in [0, 1]."""

    theta_m: float
    theta_w: float


@dataclass(frozen=True)
class EquilibriumOutcome:
    path: OutcomePath
    payoffs: PayoffPair


def validate_params(p: ModelParams) -> list[str]:
    """Return the list of domain violations (empty list means valid).

    Violations are data, not faults: callers that must fail hard wrap this
    in require_valid.
    """
    labels = {"G": "A1", "k": "A1", "M": "A1", "mu": "mu-range", "alpha": "alpha"}
    out: list[str] = []
    for name, label in labels.items():
        if not math.isfinite(getattr(p, name)):
            out.append(f"{label} violated: {name} = {getattr(p, name)} is not finite")
    if out:
        return out
    if p.G <= 0:
        out.append(f"A1 violated: G = {p.G:g} must be > 0")
    if p.k <= 0:
        out.append(f"A1 violated: k = {p.k:g} must be > 0")
    if not 0 < p.M < 1:
        out.append(f"A1 violated: M = {p.M:g} must lie in (0, 1)")
    elif p.k > 0 and (1 + p.k) * p.M >= 1:
        out.append(f"A2 violated: (1+k)M = {(1 + p.k) * p.M:g} >= 1")
    if not 0 < p.mu < 1:
        out.append(f"mu-range violated: mu = {p.mu:g} must lie in (0, 1)")
    return out


def require_valid(p: ModelParams) -> ModelParams:
    violations = validate_params(p)
    if violations:
        raise DomainError("; ".join(violations))
    return p


def payoff_accept(p: ModelParams, t: AgentTypes, lam: float) -> PayoffPair:
    """Payoffs when the advance is made and accepted."""
    return PayoffPair(u_m=p.G - lam * t.theta_w, u_w=p.k * t.theta_m - t.theta_w)


def payoff_reject(p: ModelParams, t: AgentTypes, lam: float) -> PayoffPair:
    """Payoffs when the advance is made and refused. Never positive for either side."""
    return PayoffPair(u_m=-lam * t.theta_w, u_w=-t.theta_m)


def classify_pareto(outcome: EquilibriumOutcome) -> ParetoClass:
    """Categorize a realized outcome by the two payoff signs.

    Total over every (path, payoffs) combination so that off-path inputs
    still classify: no advance is NEUTRAL by definition; a losing responder
    makes the interaction CONFLICTING unless the proposer loses too
    (DOMINATED); a weakly whole responder plus a strictly gaining proposer
    is IMPROVING. The measure-zero boundary u_m == 0 resolves to NEUTRAL
    when u_w == 0 too, to IMPROVING when only the responder strictly gains,
    and a losing proposer against a weakly gaining responder is CONFLICTING.
    """
    if outcome.path is OutcomePath.NO_PROPOSAL:
        return ParetoClass.NEUTRAL
    u_m, u_w = outcome.payoffs
    if u_w < 0:
        return ParetoClass.DOMINATED if u_m < 0 else ParetoClass.CONFLICTING
    if u_m > 0:
        return ParetoClass.IMPROVING
    if u_m == 0:
        return ParetoClass.IMPROVING if u_w > 0 else ParetoClass.NEUTRAL
    return ParetoClass.CONFLICTING
