"""Ex-ante welfare under complete information and the penalty that maximizes it.

Averaging the equilibrium payoffs over the uniform type square gives
piecewise closed forms in the penalty rate. Both curves switch branch at
lambda_pc, where the sanction cap G/lam starts binding:

    responder   Pi_w(lam) = (M^2/6)(k^2 - 1)                      lam <= lambda_pc
                          = (M^2/6)[3kG/(M lam) - 3G^2/(M lam)^2
                             + (2+k)G^3/((1+k)^2 (M lam)^3)]      lam >  lambda_pc
    proposer    Pi_m(lam) = (M^2/6)[3(1+k)G/M - lam (1+k)^2]      lam <= lambda_pc
                          = (M^2/6)[3G^2/(M^2 lam)
                             - G^3/((1+k) M^3 lam^2)]             lam >  lambda_pc

Pi_m falls strictly everywhere; Pi_w is flat up to lambda_pc, rises to a
unique interior peak at lam_w = ((2+k)/(1+k)) G/(kM), then falls. Social
welfare weighs the two with mu, so its maximum sits either at zero or
somewhere in [lambda_pc, lam_w]; no closed form exists for the interior
candidate and it is located numerically.

Two printed closed forms for the peak responder welfare circulate that do
not agree with the welfare curve itself. FormulaVariant keeps both: AS_PRINTED
evaluates the traditional display, REDERIVED the value the curve actually
attains (the two differ by (M^2/6) k^4/(2+k)^2 for every k > 0). The same
split propagates to the derived thresholds critical_gratification and
critical_weight. Nothing downstream consumes AS_PRINTED; the verification
report surfaces the gap as a known discrepancy.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .complete_info import thresholds
from .core import ModelParams
from .oracles import grid_argmax


class FormulaVariant(enum.Enum):
    AS_PRINTED = "as_printed"
    REDERIVED = "rederived"


def _lam_array(lam) -> tuple[np.ndarray, bool]:
    arr = np.asarray(lam, dtype=float)
    if np.any(arr < 0):
        raise ValueError("penalty must be >= 0")
    return np.atleast_1d(arr), arr.ndim == 0


def _restore(out: np.ndarray, scalar: bool):
    return float(out[0]) if scalar else out


def _woman_flat(p: ModelParams) -> float:
    return (p.M**2 / 6.0) * (p.k**2 - 1.0)


def _woman_tail(p: ModelParams, lam):
    g, k, m = p.G, p.k, p.M
    return (m**2 / 6.0) * (
        3.0 * k * g / (m * lam)
        - 3.0 * g**2 / (m * lam) ** 2
        + (2.0 + k) * g**3 / ((1.0 + k) ** 2 * (m * lam) ** 3)
    )


def _man_flat(p: ModelParams, lam):
    g, k, m = p.G, p.k, p.M
    return (m**2 / 6.0) * (3.0 * (1.0 + k) * g / m - lam * (1.0 + k) ** 2)


def _man_tail(p: ModelParams, lam):
    g, k, m = p.G, p.k, p.M
    return (m**2 / 6.0) * (3.0 * g**2 / (m**2 * lam) - g**3 / ((1.0 + k) * m**3 * lam**2))


def woman_welfare(p: ModelParams, lam):
    """Responder's ex-ante welfare. Accepts a scalar or an array of penalties."""
    x, scalar = _lam_array(lam)
    cut = thresholds(p).lambda_pc
    out = np.empty_like(x)
    low = x <= cut
    out[low] = _woman_flat(p)
    if np.any(~low):
        out[~low] = _woman_tail(p, x[~low])
    return _restore(out, scalar)


def man_welfare(p: ModelParams, lam):
    """Proposer's ex-ante welfare. Accepts a scalar or an array of penalties."""
    x, scalar = _lam_array(lam)
    cut = thresholds(p).lambda_pc
    out = np.empty_like(x)
    low = x <= cut
    if np.any(low):
        out[low] = _man_flat(p, x[low])
    if np.any(~low):
        out[~low] = _man_tail(p, x[~low])
    return _restore(out, scalar)


def social_welfare(p: ModelParams, lam):
    """mu-weighted combination of the two welfare curves."""
    return p.mu * man_welfare(p, lam) + (1.0 - p.mu) * woman_welfare(p, lam)


def woman_optimal_penalty(p: ModelParams) -> float:
    """Unique maximizer of the responder curve: ((2+k)/(1+k)) * G/(kM)."""
    return ((2.0 + p.k) / (1.0 + p.k)) * p.G / (p.k * p.M)


def woman_welfare_at_optimum(p: ModelParams, variant: FormulaVariant) -> float:
    """Peak responder welfare in the requested variant.

    REDERIVED is the value the curve attains at woman_optimal_penalty,
    simplified: (M^2/6) k^2 (1+k)(3+k)/(2+k)^2. AS_PRINTED is the circulating
    display (M^2/6) k^2 (3+4k+2k^2)/(2+k)^2, which overstates the peak.
    """
    k = p.k
    scale = p.M**2 / 6.0
    if variant is FormulaVariant.AS_PRINTED:
        return scale * k**2 * (3.0 + 4.0 * k + 2.0 * k**2) / (2.0 + k) ** 2
    return scale * k**2 * (1.0 + k) * (3.0 + k) / (2.0 + k) ** 2


def critical_gratification(p: ModelParams, variant: FormulaVariant) -> float:
    """Gratification level above which a zero penalty is welfare-optimal.

    Sufficiency threshold, not the exact frontier: it solves Pi(0) equal to
    the upper bound mu*Pi_m(lambda_pc) + (1-mu)*peak responder welfare, so
    G above it forces welfare_optimal_penalty to zero while smaller G may
    still do so. Each variant uses its own peak value.
    """
    k, m, mu = p.k, p.M, p.mu
    if variant is FormulaVariant.AS_PRINTED:
        return m * ((1.0 - mu) / mu) * (k**4 + 4.0 * k + 4.0) / ((1.0 + k) * (2.0 + k) ** 2)
    return 4.0 * m * (1.0 - mu) / (mu * (2.0 + k) ** 2)


def critical_weight(p: ModelParams, variant: FormulaVariant) -> float:
    """Proposer weight at which critical_gratification equals (1+k)M.

    Depends only on k; both variants lie in (0, 1/2) for every k > 0.
    """
    k = p.k
    if variant is FormulaVariant.AS_PRINTED:
        a = k**4 + 4.0 * k + 4.0
        return a / (2.0 * a + 6.0 * k**3 + 13.0 * k**2 + 8.0 * k)
    return 4.0 / (4.0 + (1.0 + k) * (2.0 + k) ** 2)


@dataclass(frozen=True)
class WelfareOptimum:
    """Chosen penalty plus the two candidate values it was chosen from."""

    penalty: float
    value: float
    value_at_zero: float
    interior_argmax: float
    interior_value: float


def welfare_optimal_penalty(p: ModelParams) -> WelfareOptimum:
    """Maximize social welfare over the penalty axis.

    The maximum is either at zero or inside [lambda_pc, woman-optimal]; the
    interior candidate comes from a 1000-point grid refined to 1e-10 inside
    its bracket. Ties within 1e-12 resolve to zero (smallest optimal
    penalty).
    """
    lo = thresholds(p).lambda_pc
    hi = woman_optimal_penalty(p)
    base = social_welfare(p, 0.0)
    interior = grid_argmax(
        lambda lam: social_welfare(p, lam), lo, hi, (hi - lo) / 999.0, refine=True
    )
    if interior.value > base + 1e-12:
        penalty, value = interior.argmax, interior.value
    else:
        penalty, value = 0.0, base
    return WelfareOptimum(
        penalty=penalty,
        value=value,
        value_at_zero=base,
        interior_argmax=interior.argmax,
        interior_value=interior.value,
    )
