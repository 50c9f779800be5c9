import numpy as np
import pytest

from penaltygame import AgentTypes, ModelParams, ParetoClass, region_map, thresholds
from penaltygame.complete_info import (
    classify_interaction,
    equilibrium_outcome,
    proposal_cutoff,
)
from penaltygame.core import OutcomePath, payoff_accept, payoff_reject

from conftest import random_params


def _best_response_outcome(p, t, lam):
    """Independent equilibrium oracle: enumerate actions, no closed form.

    The responder accepts iff accepting is at least as good as refusing.
    The proposer advances iff his induced payoff is positive, or zero with
    an acceptance (a refused advance never happens at indifference).
    """
    accept = payoff_accept(p, t, lam)
    reject = payoff_reject(p, t, lam)
    responder_accepts = accept.u_w >= reject.u_w
    induced = accept if responder_accepts else reject
    advances = induced.u_m > 0 or (induced.u_m == 0 and responder_accepts)
    if not advances:
        return OutcomePath.NO_PROPOSAL, 0.0, 0.0
    path = (
        OutcomePath.PROPOSAL_ACCEPTED
        if responder_accepts
        else OutcomePath.PROPOSAL_REJECTED
    )
    return path, induced.u_m, induced.u_w


def test_thresholds_p0(p0):
    t = thresholds(p0)
    assert t.lambda_pc == pytest.approx(1.1111111111111112, abs=1e-12)
    assert t.lambda_pi == pytest.approx(1.6666666666666667, abs=1e-12)


def test_threshold_ordering_random():
    rng = np.random.default_rng(7)
    for _ in range(200):
        p = random_params(rng)
        t = thresholds(p)
        assert 0 < t.lambda_pc < t.lambda_pi


def test_cutoff_with_zero_penalty_ignores_sanction(p0):
    assert proposal_cutoff(p0, theta_m=0.2, lam=0.0) == pytest.approx(0.6)
    # positive penalties cap the advance at the point where it stops paying
    assert proposal_cutoff(p0, theta_m=0.2, lam=4.0) == pytest.approx(0.25)


def test_equilibrium_matches_best_response_enumeration():
    rng = np.random.default_rng(123)
    for _ in range(10_000):
        p = random_params(rng)
        lam = float(rng.uniform(0.0, 3.0 / (p.k * p.M)))
        t = AgentTypes(theta_m=float(rng.uniform(0, p.M)), theta_w=float(rng.uniform(0, 1)))
        got = equilibrium_outcome(p, t, lam)
        path, u_m, u_w = _best_response_outcome(p, t, lam)
        assert got.path is path
        assert got.payoffs.u_m == pytest.approx(u_m, abs=1e-12)
        assert got.payoffs.u_w == pytest.approx(u_w, abs=1e-12)


def test_rejection_never_on_path():
    rng = np.random.default_rng(5)
    for _ in range(2_000):
        p = random_params(rng)
        lam = float(rng.uniform(0.0, 5.0))
        t = AgentTypes(theta_m=float(rng.uniform(0, p.M)), theta_w=float(rng.uniform(0, 1)))
        assert equilibrium_outcome(p, t, lam).path is not OutcomePath.PROPOSAL_REJECTED


def test_raising_the_penalty_only_deters():
    rng = np.random.default_rng(11)
    for _ in range(2_000):
        p = random_params(rng)
        lam_lo = float(rng.uniform(0.0, 2.0))
        lam_hi = lam_lo + float(rng.uniform(0.0, 2.0))
        t = AgentTypes(theta_m=float(rng.uniform(0, p.M)), theta_w=float(rng.uniform(0, 1)))
        hi_path = equilibrium_outcome(p, t, lam_hi).path
        if hi_path is OutcomePath.PROPOSAL_ACCEPTED:
            assert equilibrium_outcome(p, t, lam_lo).path is OutcomePath.PROPOSAL_ACCEPTED


def test_on_path_outcomes_never_dominated():
    rng = np.random.default_rng(17)
    for _ in range(5_000):
        p = random_params(rng)
        lam = float(rng.uniform(0.0, 4.0))
        t = AgentTypes(theta_m=float(rng.uniform(0, p.M)), theta_w=float(rng.uniform(0, 1)))
        assert classify_interaction(p, t, lam) is not ParetoClass.DOMINATED


def test_interaction_classes_by_region(p0):
    # an accepted advance she gains from
    assert classify_interaction(p0, AgentTypes(0.25, 0.3), 1.0) is ParetoClass.IMPROVING
    # an accepted advance she suffers from
    assert classify_interaction(p0, AgentTypes(0.1, 0.25), 1.0) is ParetoClass.CONFLICTING
    # a deterred advance
    assert classify_interaction(p0, AgentTypes(0.1, 0.9), 1.0) is ParetoClass.NEUTRAL


def test_region_map_shape_and_cells(p0):
    grid = region_map(p0, lam=1.0, resolution=4)
    assert len(grid.cells) == 16
    theta_ms = sorted({c[0] for c in grid.cells})
    theta_ws = sorted({c[1] for c in grid.cells})
    assert theta_ms == pytest.approx([p0.M * (i + 0.5) / 4 for i in range(4)])
    assert theta_ws == pytest.approx([(j + 0.5) / 4 for j in range(4)])
    # row-major: the outer index walks theta_m
    assert grid.cells[0][0] == grid.cells[1][0]


def test_region_map_rejects_degenerate_resolution(p0):
    with pytest.raises(ValueError):
        region_map(p0, lam=1.0, resolution=1)


def test_region_map_counts_match_probabilities(p0):
    res = 400
    grid = region_map(p0, lam=1.0, resolution=res)
    counts = grid.counts()
    total = res * res
    # cell-center frequencies approach the closed-form shares (0.3, 0.15)
    assert counts["PI"] / total == pytest.approx(0.3, abs=2e-3)
    assert counts["PC"] / total == pytest.approx(0.15, abs=2e-3)
    assert counts.get("PD", 0) == 0


def test_region_map_csv_round_trip(p0):
    grid = region_map(p0, lam=2.0, resolution=3)
    text = grid.to_csv_text()
    lines = text.strip().split("\n")
    assert lines[0] == "theta_m,theta_w,class"
    assert len(lines) == 10
    for line in lines[1:]:
        tm, tw, cls = line.split(",")
        assert float(tm) <= p0.M
        assert cls in {"PN", "PI", "PC", "PD"}


def test_region_map_invariant_below_first_threshold(p0):
    # any two penalties under the first deterrence threshold classify
    # every cell identically, so the files agree byte for byte
    a = region_map(p0, lam=0.5, resolution=50).to_csv_text()
    b = region_map(p0, lam=1.0, resolution=50).to_csv_text()
    assert a == b


def test_region_map_respects_sanction_cap(p0):
    grid = region_map(p0, lam=2.0, resolution=80)
    half_cell = 0.5 / 80
    for theta_m, theta_w, cls in grid.cells:
        if cls is not ParetoClass.NEUTRAL:
            assert theta_w <= p0.G / 2.0 + half_cell
            assert theta_w <= (1 + p0.k) * theta_m + half_cell
