"""Consent-based evaluation of the penalty under complete information.

Instead of summing utilities, a consent-minded planner scores the chances
that an interaction lands in each Pareto category. Integrating the
equilibrium regions of the type square gives, with t = thresholds(p):

    lam <= lambda_pc:                phi_pi = kM/2
                                     phi_pc = M/2
    lambda_pc < lam <= lambda_pi:    phi_pi = kM/2
                                     phi_pc = (1/M)[GM/lam - kM^2/2
                                                    - G^2/(2(1+k)lam^2)]
    lam > lambda_pi:                 phi_pi = (1/M)[GM/lam - G^2/(2 lam^2 k)]
                                     phi_pc = (1/M) G^2/(2k(1+k)lam^2)

with phi_pd identically zero (a dominated interaction would require the
proposer to advance at a loss). The planner's objective is any smooth rule
over these probabilities satisfying two axioms, checked numerically here:

    MON   strictly decreasing in phi_pc and phi_pd;
    RME   the marginal value of more improving interactions never exceeds
          the marginal value of fewer conflicting/dominated ones.

The shipped linear family C = alpha*phi_pi - (phi_pc + phi_pd) satisfies
both exactly when alpha <= 1. Its maximizer has the closed form

    lam*_c = ((1 + alpha(1+k)) / (alpha(1+k))) * G/(kM),    alpha in (0, 1],

always beyond lambda_pi: pricing out every conflicting interaction and a
sliver of improving ones beats tolerating conflict, whatever alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .complete_info import thresholds
from .core import DomainError, ModelParams
from .welfare import _lam_array, _restore

ConsentObjective = Callable[[float, float, float], float]

PROBE_STEP = 1e-3
PROBE_TOL = 1e-9


class ObjectiveError(ValueError):
    """A consent objective failed MON or RME."""


class OptimumError(RuntimeError):
    """A claimed consent optimum lost to another branch supremum."""


@dataclass(frozen=True)
class ParetoProbabilities:
    phi_pi: float
    phi_pc: float
    phi_pd: float

    @property
    def phi_pn(self) -> float:
        return 1.0 - (self.phi_pi + self.phi_pc + self.phi_pd)


@dataclass(frozen=True)
class LinearConsent:
    """The linear objective family C = alpha*phi_pi - (phi_pc + phi_pd)."""

    alpha: float

    def __call__(self, phi_pi, phi_pc, phi_pd):
        return self.alpha * phi_pi - (phi_pc + phi_pd)


def _phi_pc_mid(p: ModelParams, lam):
    # conflicting share while only the sanction cap binds
    g, k, m = p.G, p.k, p.M
    return (g * m / lam - k * m**2 / 2.0 - g**2 / (2.0 * (1.0 + k) * lam**2)) / m


def _phi_pi_tail(p: ModelParams, lam):
    # improving share once the cap also prices out improving interactions
    g, k, m = p.G, p.k, p.M
    return (g * m / lam - g**2 / (2.0 * lam**2 * k)) / m


def _phi_pc_tail(p: ModelParams, lam):
    g, k, m = p.G, p.k, p.M
    return g**2 / (2.0 * k * (1.0 + k) * lam**2 * m)


def _phi_arrays(p: ModelParams, lam: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    k, m = p.k, p.M
    t = thresholds(p)
    pi = np.empty_like(lam)
    pc = np.empty_like(lam)
    b1 = lam <= t.lambda_pc
    b2 = ~b1 & (lam <= t.lambda_pi)
    b3 = ~b1 & ~b2
    pi[b1] = k * m / 2.0
    pc[b1] = m / 2.0
    if np.any(b2):
        pi[b2] = k * m / 2.0
        pc[b2] = _phi_pc_mid(p, lam[b2])
    if np.any(b3):
        pi[b3] = _phi_pi_tail(p, lam[b3])
        pc[b3] = _phi_pc_tail(p, lam[b3])
    return pi, pc


def pareto_probabilities(p: ModelParams, lam: float) -> ParetoProbabilities:
    """Chance of an improving / conflicting / dominated interaction."""
    x, _ = _lam_array(lam)
    pi, pc = _phi_arrays(p, x)
    return ParetoProbabilities(phi_pi=float(pi[0]), phi_pc=float(pc[0]), phi_pd=0.0)


def consent_value(p: ModelParams, lam, obj: ConsentObjective | None = None):
    """Objective evaluated at the equilibrium probabilities.

    obj defaults to the linear family at p.alpha. Accepts scalar or array
    penalties; non-vectorized user objectives should be fed scalars.
    """
    if obj is None:
        obj = LinearConsent(p.alpha)
    x, scalar = _lam_array(lam)
    pi, pc = _phi_arrays(p, x)
    out = np.asarray(obj(pi, pc, np.zeros_like(pi)), dtype=float)
    return _restore(out, scalar)


def consent_optimal_penalty(p: ModelParams, alpha: float | None = None) -> float:
    """Maximizer of the linear consent objective, confirmed globally.

    The closed form is the third-branch stationary point; holding it against
    the flat first-branch value and the lam -> inf limit (zero) confirms it
    is the global maximum. That confirmation cannot fail for alpha in (0, 1]
    with valid params; the guard documents the claim.
    """
    if alpha is None:
        alpha = p.alpha
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha = {alpha:g} must lie in (0, 1]")
    a1k = alpha * (1.0 + p.k)
    lam_star = ((1.0 + a1k) / a1k) * p.G / (p.k * p.M)
    obj = LinearConsent(alpha)
    star = consent_value(p, lam_star, obj)
    flat = consent_value(p, 0.0, obj)
    if star < max(flat, 0.0) - 1e-12:
        raise OptimumError(
            f"stationary point {lam_star:g} (value {star:g}) lost to "
            f"flat-branch value {flat:g} or the zero tail"
        )
    return lam_star


@dataclass(frozen=True)
class AxiomCheck:
    passed: bool
    witness: tuple[float, float, float] | None = None
    detail: str = ""


def _probe_lattice(divisions: int = 20, interior: bool = False):
    h = 1.0 / divisions
    lo = 1 if interior else 0
    for i in range(lo, divisions):
        for j in range(lo, divisions):
            for l in range(lo, divisions):
                if (i + j + l) * h <= 1.0 - h:
                    yield (i * h, j * h, l * h)


def check_mon(obj: ConsentObjective) -> AxiomCheck:
    """Probe that obj strictly falls when phi_pc or phi_pd rises."""
    e = PROBE_STEP
    for point in _probe_lattice():
        pi, pc, pd = point
        base = obj(pi, pc, pd)
        for bumped in ((pi, pc + e, pd), (pi, pc, pd + e)):
            if obj(*bumped) - base > -PROBE_TOL:
                return AxiomCheck(
                    passed=False,
                    witness=point,
                    detail=f"objective does not strictly decrease toward {bumped}",
                )
    return AxiomCheck(passed=True)


def check_rme(obj: ConsentObjective) -> AxiomCheck:
    """Probe that the phi_pi marginal never beats the phi_pc/phi_pd marginals."""
    e = PROBE_STEP
    for point in _probe_lattice(interior=True):
        pi, pc, pd = point
        d_pi = (obj(pi + e, pc, pd) - obj(pi - e, pc, pd)) / (2.0 * e)
        d_pc = (obj(pi, pc + e, pd) - obj(pi, pc - e, pd)) / (2.0 * e)
        d_pd = (obj(pi, pc, pd + e) - obj(pi, pc, pd - e)) / (2.0 * e)
        if d_pi - abs(d_pc) > PROBE_TOL or d_pi - abs(d_pd) > PROBE_TOL:
            return AxiomCheck(
                passed=False,
                witness=point,
                detail=f"phi_pi marginal {d_pi:g} exceeds |{d_pc:g}| or |{d_pd:g}|",
            )
    return AxiomCheck(passed=True)
