"""The proposal game when each side sees only its own type.

With types private, strategies can only condition on expectations. The
responder accepts an advance iff accepting beats refusing against a uniform
proposer type, k*M/2 - theta_w >= -M/2, i.e. theta_w <= theta_a = (1+k)M/2.
The proposer, facing an unknown theta_w, expects

    E[u_m | advance] = G*theta_a - lam/2 = ((1+k)GM - lam) / 2,

which no longer depends on his own type: either every proposer type
advances (lam < lambda_bar = (1+k)GM) or none does. At exact indifference
(lam == lambda_bar) nobody advances: unlike the complete-information
regime, the tie here breaks toward abstaining.

Below lambda_bar the expected welfare levels are flat or linear:

    responder  (M/8)((1+k)^2 M - 4)        constant, sign of (1+k)^2 M - 4
    proposer   ((1+k)GM - lam)/2           falls linearly to 0 at lambda_bar

(an AS_PRINTED variant of the proposer line with a spurious extra factor M
circulates; it contradicts the per-type expectation above and the
critical_gratification threshold, and the verification report flags it).

Ex-ante consent categories classify each responder type by expected payoff
at her own information set: improving iff theta_w <= theta_plus = kM/2,
conflicting otherwise (the proposer, who chose to advance, is ahead ex
ante). Every axiom-respecting objective then prefers pricing out advances
entirely, so the minimum consent-optimal penalty is exactly lambda_bar.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .consent import (
    ConsentObjective,
    LinearConsent,
    ObjectiveError,
    OptimumError,
    ParetoProbabilities,
    check_mon,
    check_rme,
)
from .core import ModelParams
from .welfare import FormulaVariant, _lam_array, _restore


@dataclass(frozen=True)
class BayesEquilibrium:
    all_propose: bool
    theta_w_accept: float
    theta_w_breakeven: float
    lambda_bar: float


def deterrence_penalty(p: ModelParams) -> float:
    """Smallest penalty at which no proposer type advances: (1+k)GM."""
    return (1.0 + p.k) * p.G * p.M


def bayes_equilibrium(p: ModelParams, lam: float) -> BayesEquilibrium:
    lam_bar = deterrence_penalty(p)
    return BayesEquilibrium(
        all_propose=lam < lam_bar,
        theta_w_accept=(1.0 + p.k) * p.M / 2.0,
        theta_w_breakeven=p.k * p.M / 2.0,
        lambda_bar=lam_bar,
    )


def expected_welfare_woman(p: ModelParams, lam):
    """Responder's ex-ante welfare; scalar or array penalties."""
    x, scalar = _lam_array(lam)
    level = (p.M / 8.0) * ((1.0 + p.k) ** 2 * p.M - 4.0)
    out = np.where(x < deterrence_penalty(p), level, 0.0)
    return _restore(out, scalar)


def expected_welfare_man(
    p: ModelParams, lam, variant: FormulaVariant = FormulaVariant.REDERIVED
):
    """Proposer's ex-ante welfare; scalar or array penalties.

    REDERIVED (the default, and the form all other results here rest on) is
    ((1+k)GM - lam)/2 below lambda_bar. AS_PRINTED multiplies that by M.
    """
    x, scalar = _lam_array(lam)
    lam_bar = deterrence_penalty(p)
    level = (lam_bar - x) / 2.0
    if variant is FormulaVariant.AS_PRINTED:
        level = p.M * level
    out = np.where(x < lam_bar, level, 0.0)
    return _restore(out, scalar)


def expected_social_welfare(p: ModelParams, lam):
    return p.mu * expected_welfare_man(p, lam) + (1.0 - p.mu) * expected_welfare_woman(
        p, lam
    )


def woman_optimal_penalty(p: ModelParams) -> float:
    """Smallest penalty maximizing the responder's expected welfare.

    Her welfare is one constant below lambda_bar and zero after, so the
    answer is lambda_bar when the constant is negative ((1+k)^2 M < 4) and
    zero otherwise, including the boundary where both levels vanish.
    """
    if (1.0 + p.k) ** 2 * p.M < 4.0:
        return deterrence_penalty(p)
    return 0.0


def critical_gratification(p: ModelParams) -> float:
    """Gratification threshold splitting zero from positive optimal penalty.

    Solves expected_social_welfare(0) = 0 in G. May be negative, in which
    case every G > 0 already makes the zero penalty optimal.
    """
    return (1.0 / (4.0 * (1.0 + p.k))) * ((1.0 - p.mu) / p.mu) * (
        4.0 - (1.0 + p.k) ** 2 * p.M
    )


@dataclass(frozen=True)
class PrivateWelfareOptimum:
    penalty: float
    value_at_zero: float
    lambda_bar: float


def welfare_optimal_penalty(p: ModelParams) -> PrivateWelfareOptimum:
    """Either no penalty or full deterrence; nothing between can win.

    Social welfare falls linearly on [0, lambda_bar) and is zero after, so
    the optimum is 0 when the zero-penalty level is positive (exactly when
    G exceeds critical_gratification) and lambda_bar otherwise. A tie at
    zero resolves to the zero penalty.
    """
    base = expected_social_welfare(p, 0.0)
    penalty = 0.0 if base >= -1e-15 else deterrence_penalty(p)
    return PrivateWelfareOptimum(
        penalty=penalty, value_at_zero=base, lambda_bar=deterrence_penalty(p)
    )


def pareto_probabilities(p: ModelParams, lam: float) -> ParetoProbabilities:
    """Ex-ante category chances, classified at each side's information set."""
    if lam < deterrence_penalty(p):
        return ParetoProbabilities(
            phi_pi=p.k * p.M / 2.0, phi_pc=(2.0 - p.k * p.M) / 2.0, phi_pd=0.0
        )
    return ParetoProbabilities(phi_pi=0.0, phi_pc=0.0, phi_pd=0.0)


@dataclass(frozen=True)
class PrivateConsentAnalysis:
    probabilities: ParetoProbabilities
    value: float
    baseline: float
    min_optimal_penalty: float


def consent_analysis(
    p: ModelParams, lam: float, obj: ConsentObjective | None = None
) -> PrivateConsentAnalysis:
    """Consent view of the private regime at one penalty level.

    Requires an objective passing both axioms (obj defaults to the linear
    family at p.alpha). Reports the ex-ante category probabilities, the
    objective's value, its baseline at the no-advance vector, and the
    minimum consent-optimal penalty lambda_bar. The participation value is
    below the baseline for every admissible objective: moving along the
    segment toward (kM/2, 1 - kM/2, 0) adds conflict faster than
    improvement (kM < 1), which MON plus RME always scores negatively.
    """
    if obj is None:
        obj = LinearConsent(p.alpha)
    mon = check_mon(obj)
    if not mon.passed:
        raise ObjectiveError(f"objective fails MON at {mon.witness}: {mon.detail}")
    rme = check_rme(obj)
    if not rme.passed:
        raise ObjectiveError(f"objective fails RME at {rme.witness}: {rme.detail}")
    lam_bar = deterrence_penalty(p)
    probs = pareto_probabilities(p, lam)
    value = float(obj(probs.phi_pi, probs.phi_pc, probs.phi_pd))
    baseline = float(obj(0.0, 0.0, 0.0))
    participation = float(obj(p.k * p.M / 2.0, (2.0 - p.k * p.M) / 2.0, 0.0))
    if participation >= baseline:
        raise OptimumError(
            "participation outscored the no-advance baseline "
            f"({participation:g} >= {baseline:g}) despite MON and RME"
        )
    return PrivateConsentAnalysis(
        probabilities=probs,
        value=value,
        baseline=baseline,
        min_optimal_penalty=lam_bar,
    )
