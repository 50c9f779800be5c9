"""Independent numerical checks for every closed form in the package.

Three oracles, deliberately built from game primitives only (payoff
expressions plus the equilibrium decision rules), so that each analytic
expected-welfare formula, probability, and optimizer elsewhere in the
package can be cross-examined by a computation that never touches it:

* piecewise-exact quadrature: the type square is split along the analytic
  region boundaries, every piece then has a polynomial integrand, and
  16-node Gauss-Legendre integrates polynomials of that degree exactly;
* Monte Carlo with a counter-based stream whose draws depend only on
  (n, seed), never on how the work is batched;
* exhaustive grid argmax with optional bracketed refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar

from .core import ModelParams

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(16)

_AGENTS = ("man", "woman")
_REGIMES = ("complete", "private")


def _check_labels(agent: str, regime: str) -> None:
    if agent not in _AGENTS:
        raise ValueError(f"agent must be one of {_AGENTS}, got {agent!r}")
    if regime not in _REGIMES:
        raise ValueError(f"regime must be one of {_REGIMES}, got {regime!r}")


def _integrate(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float) -> float:
    """Gauss-Legendre on [lo, hi]; exact for polynomials up to degree 31."""
    if hi <= lo:
        return 0.0
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    return half * float(np.dot(_WEIGHTS, f(mid + half * _NODES)))


def _quad_complete(p: ModelParams, lam: float, agent: str) -> float:
    # An advance happens iff theta_w <= min((1+k)theta_m, G/lam); the cutoff
    # switches branch at theta_np = G/(lam(1+k)), the only outer split needed.
    one_k = 1.0 + p.k
    cap = math.inf if lam == 0 else p.G / lam

    def inner(theta_m: float) -> float:
        cut = min(one_k * theta_m, cap)
        if agent == "man":
            return _integrate(lambda tw: p.G - lam * tw, 0.0, cut)
        return _integrate(lambda tw: p.k * theta_m - tw, 0.0, cut)

    def outer(theta_ms: np.ndarray) -> np.ndarray:
        return np.array([inner(tm) for tm in theta_ms])

    split = p.M if lam == 0 else min(max(p.G / (lam * one_k), 0.0), p.M)
    return (_integrate(outer, 0.0, split) + _integrate(outer, split, p.M)) / p.M


def _quad_private(p: ModelParams, lam: float, agent: str) -> float:
    # Below lambda_bar every proposer type advances and the responder
    # accepts iff theta_w <= theta_a; at or above it nobody advances.
    lam_bar = (1.0 + p.k) * p.G * p.M
    if lam >= lam_bar:
        return 0.0
    theta_a = (1.0 + p.k) * p.M / 2.0

    def outer(theta_ws: np.ndarray, accepted: bool) -> np.ndarray:
        vals = []
        for tw in theta_ws:
            if agent == "man":
                level = p.G - lam * tw if accepted else -lam * tw
                f = lambda tm, level=level: np.full_like(tm, level)
            elif accepted:
                f = lambda tm, tw=tw: p.k * tm - tw
            else:
                f = lambda tm: -tm
            vals.append(_integrate(f, 0.0, p.M) / p.M)
        return np.array(vals)

    return _integrate(lambda tws: outer(tws, True), 0.0, theta_a) + _integrate(
        lambda tws: outer(tws, False), theta_a, 1.0
    )


def quadrature_welfare(
    p: ModelParams, lam: float, agent: str = "woman", regime: str = "complete"
) -> float:
    """Expected equilibrium payoff of one agent, exact to rounding."""
    _check_labels(agent, regime)
    if lam < 0:
        raise ValueError(f"lam = {lam} must be >= 0")
    if regime == "complete":
        return _quad_complete(p, lam, agent)
    return _quad_private(p, lam, agent)


@dataclass(frozen=True)
class McConfig:
    n: int = 1_000_000
    seed: int = 42
    batches: int = 1


class McEstimate(NamedTuple):
    mean: float
    stderr: float
    n: int


def _uniform_pairs(seed: int, sample_start: int, count: int) -> np.ndarray:
    """(count, 2) uniforms for samples [sample_start, sample_start+count).

    One counter block of the underlying generator holds 4 raw 64-bit words,
    i.e. exactly 2 samples, so any even sample_start lands on a block
    boundary and the stream is identical however the total is batched.
    """
    if sample_start % 2:
        raise ValueError("batch starts must be even sample indices")
    bg = np.random.Philox(key=seed)
    if sample_start:
        bg.advance(sample_start // 2)
    words = bg.random_raw(2 * count)
    return ((words >> np.uint64(11)) * 2.0**-53).reshape(count, 2)


def _batch_bounds(n: int, batches: int) -> list[tuple[int, int]]:
    if n < 1 or batches < 1:
        raise ValueError("n and batches must be >= 1")
    size = -(-n // batches)
    size += size % 2  # keep every batch start block-aligned
    bounds = []
    start = 0
    while start < n:
        stop = min(start + size, n)
        bounds.append((start, stop))
        start = stop
    return bounds


def _draw_types(p: ModelParams, cfg: McConfig) -> tuple[np.ndarray, np.ndarray]:
    parts = [
        _uniform_pairs(cfg.seed, start, stop - start)
        for start, stop in _batch_bounds(cfg.n, cfg.batches)
    ]
    u = np.concatenate(parts, axis=0)
    return p.M * u[:, 0], u[:, 1]


def _payoff_samples(
    p: ModelParams, lam: float, agent: str, regime: str, cfg: McConfig
) -> np.ndarray:
    theta_m, theta_w = _draw_types(p, cfg)
    if regime == "complete":
        cap = math.inf if lam == 0 else p.G / lam
        accept = theta_w <= np.minimum((1.0 + p.k) * theta_m, cap)
        vals = np.zeros(cfg.n)
        if agent == "man":
            vals[accept] = p.G - lam * theta_w[accept]
        else:
            vals[accept] = p.k * theta_m[accept] - theta_w[accept]
        return vals
    lam_bar = (1.0 + p.k) * p.G * p.M
    if lam >= lam_bar:
        return np.zeros(cfg.n)
    accept = theta_w <= (1.0 + p.k) * p.M / 2.0
    if agent == "man":
        return np.where(accept, p.G - lam * theta_w, -lam * theta_w)
    return np.where(accept, p.k * theta_m - theta_w, -theta_m)


def mc_welfare(
    p: ModelParams, lam: float, agent: str, regime: str, cfg: McConfig
) -> McEstimate:
    """Monte Carlo estimate of expected equilibrium payoff.

    The reduction runs once over the full sample array in draw order, so the
    estimate is bit-identical for any cfg.batches with the same (n, seed).
    """
    _check_labels(agent, regime)
    vals = _payoff_samples(p, lam, agent, regime, cfg)
    mean = float(vals.mean())
    stderr = 0.0 if cfg.n < 2 else float(vals.std(ddof=1) / math.sqrt(cfg.n))
    return McEstimate(mean=mean, stderr=stderr, n=cfg.n)


@dataclass(frozen=True)
class McProbabilities:
    phi_pi: McEstimate
    phi_pc: McEstimate
    phi_pd: McEstimate


def _binomial_estimate(hits: np.ndarray, n: int) -> McEstimate:
    share = float(hits.sum()) / n
    stderr = 0.0 if n < 2 else math.sqrt(share * (1.0 - share) / n)
    return McEstimate(mean=share, stderr=stderr, n=n)


def mc_pareto_probabilities(
    p: ModelParams, lam: float, regime: str, cfg: McConfig
) -> McProbabilities:
    """Sampled frequencies of the improving/conflicting/dominated classes.

    Complete information classifies each draw by its realized payoff signs
    (a vectorized twin of the scalar classifier). Private information
    classifies by expected payoffs at each side's own information set: the
    proposer advances only when ahead ex ante, so below lambda_bar a draw is
    improving iff theta_w is weakly ahead in expectation and conflicting
    otherwise; at or above lambda_bar everything is neutral.
    """
    _check_labels("man", regime)
    theta_m, theta_w = _draw_types(p, cfg)
    n = cfg.n
    if regime == "complete":
        cap = math.inf if lam == 0 else p.G / lam
        accept = theta_w <= np.minimum((1.0 + p.k) * theta_m, cap)
        u_m = p.G - lam * theta_w
        u_w = p.k * theta_m - theta_w
        pd = accept & (u_w < 0) & (u_m < 0)
        pc = accept & (((u_w < 0) & (u_m >= 0)) | ((u_w >= 0) & (u_m < 0)))
        pi = accept & (((u_m > 0) & (u_w >= 0)) | ((u_m == 0) & (u_w > 0)))
    else:
        lam_bar = (1.0 + p.k) * p.G * p.M
        if lam >= lam_bar:
            zero = np.zeros(n, dtype=bool)
            pi = pc = pd = zero
        else:
            pi = theta_w <= p.k * p.M / 2.0
            pc = ~pi
            pd = np.zeros(n, dtype=bool)
    return McProbabilities(
        phi_pi=_binomial_estimate(pi, n),
        phi_pc=_binomial_estimate(pc, n),
        phi_pd=_binomial_estimate(pd, n),
    )


class GridArgmax(NamedTuple):
    argmax: float
    value: float


def _closed_grid(lo: float, hi: float, step: float) -> np.ndarray:
    n_steps = int(math.floor((hi - lo) / step + 1e-12))
    xs = lo + step * np.arange(n_steps + 1)
    if hi - xs[-1] > step * 1e-9:
        xs = np.append(xs, hi)
    else:
        xs[-1] = hi
    return xs


def grid_argmax(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    step: float,
    refine: bool = False,
) -> GridArgmax:
    """Exhaustive maximizer of f over the closed grid lo, lo+step, ..., hi.

    Ties go to the smallest abscissa. With refine=True the winning point is
    polished inside its bracketing neighbors to an abscissa tolerance of
    1e-10, and the polish is kept only when it strictly improves on the grid.
    """
    if step <= 0:
        raise ValueError(f"step = {step} must be > 0")
    if hi < lo:
        raise ValueError(f"need lo <= hi, got [{lo}, {hi}]")
    if hi == lo:
        return GridArgmax(argmax=lo, value=float(f(lo)))
    xs = _closed_grid(lo, hi, step)
    try:
        ys = np.asarray(f(xs), dtype=float)
        if ys.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        ys = np.array([float(f(x)) for x in xs])
    i = int(np.argmax(ys))
    best_x, best_y = float(xs[i]), float(ys[i])
    if refine:
        a = float(xs[max(i - 1, 0)])
        b = float(xs[min(i + 1, len(xs) - 1)])
        if b > a:
            res = minimize_scalar(
                lambda x: -float(f(x)),
                bounds=(a, b),
                method="bounded",
                options={"xatol": 1e-10},
            )
            if -float(res.fun) > best_y:
                best_x, best_y = float(res.x), -float(res.fun)
    return GridArgmax(argmax=best_x, value=best_y)
