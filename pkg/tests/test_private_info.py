import numpy as np
import pytest
from scipy.optimize import brentq

from penaltygame import McConfig, ModelParams, mc_welfare, quadrature_welfare
from penaltygame.complete_info import equilibrium_outcome
from penaltygame.consent import ObjectiveError
from penaltygame.core import AgentTypes, OutcomePath
from penaltygame.private_info import (
    bayes_equilibrium,
    consent_analysis,
    critical_gratification,
    deterrence_penalty,
    expected_welfare_man,
    expected_welfare_woman,
    pareto_probabilities,
    welfare_optimal_penalty,
    woman_optimal_penalty,
)
from penaltygame.welfare import FormulaVariant

from conftest import random_params


def test_equilibrium_thresholds_p0(p0):
    eq = bayes_equilibrium(p0, 0.5)
    assert eq.theta_w_accept == pytest.approx(0.45, abs=1e-15)
    assert eq.theta_w_breakeven == pytest.approx(0.3, abs=1e-15)
    assert eq.lambda_bar == pytest.approx(0.9, abs=1e-15)
    assert eq.all_propose


def test_no_advances_at_or_above_deterrence_level(p0):
    assert not bayes_equilibrium(p0, 0.9).all_propose
    assert not bayes_equilibrium(p0, 1.5).all_propose
    assert bayes_equilibrium(p0, 0.8999).all_propose


def test_deterrence_level_linear_in_gratification():
    a = deterrence_penalty(ModelParams(G=1.0, k=2.0, M=0.3))
    b = deterrence_penalty(ModelParams(G=2.0, k=2.0, M=0.3))
    assert b == pytest.approx(2 * a, rel=1e-15)


def test_acceptance_threshold_is_the_indifference_root():
    # expected accept-minus-refuse payoff for the responder, uniform
    # over the proposer's type, changes sign exactly at the threshold
    rng = np.random.default_rng(71)
    for _ in range(30):
        p = random_params(rng)
        eq = bayes_equilibrium(p, 0.0)
        diff = lambda x: (p.k * p.M / 2.0 - x) + p.M / 2.0
        root = brentq(diff, 0.0, 1.0, xtol=1e-12)
        assert eq.theta_w_accept == pytest.approx(root, abs=1e-9)
        for x in rng.uniform(0.0, 1.0, size=333):
            assert (diff(x) > 0) == (x < eq.theta_w_accept) or diff(x) == 0


def test_tiebreak_differs_from_complete_information(p0):
    # at exactly the deterrence penalty the proposer abstains here, while
    # under complete information the same penalty still sees advances
    lam = deterrence_penalty(p0)
    assert not bayes_equilibrium(p0, lam).all_propose
    types = AgentTypes(theta_m=0.25, theta_w=0.3)
    assert equilibrium_outcome(p0, types, lam).path is OutcomePath.PROPOSAL_ACCEPTED


def test_woman_welfare_levels(p0):
    assert expected_welfare_woman(p0, 0.0) == pytest.approx(-0.04875, abs=1e-12)
    assert expected_welfare_woman(p0, 0.5) == pytest.approx(-0.04875, abs=1e-12)
    assert expected_welfare_woman(p0, 0.9) == 0.0
    assert expected_welfare_woman(p0, 2.0) == 0.0
    crowded = ModelParams(G=1.0, k=9.0, M=0.09, mu=0.5)
    assert expected_welfare_woman(crowded, 0.5) == pytest.approx(0.05625, abs=1e-12)


def test_man_welfare_levels_and_variants(p0):
    assert expected_welfare_man(p0, 0.0) == pytest.approx(0.45, abs=1e-12)
    assert expected_welfare_man(p0, 0.5) == pytest.approx(0.2, abs=1e-12)
    assert expected_welfare_man(p0, 0.9) == 0.0
    assert expected_welfare_man(p0, 0.0, FormulaVariant.AS_PRINTED) == pytest.approx(
        0.135, abs=1e-12
    )
    assert expected_welfare_man(p0, 0.5, FormulaVariant.AS_PRINTED) == pytest.approx(
        0.06, abs=1e-12
    )


def test_closed_forms_match_quadrature_random_sets():
    rng = np.random.default_rng(72)
    for _ in range(25):
        p = random_params(rng)
        lam_bar = deterrence_penalty(p)
        for lam in (0.0, lam_bar / 4, lam_bar / 2, 3 * lam_bar / 4, lam_bar, 3 * lam_bar):
            assert expected_welfare_woman(p, lam) == pytest.approx(
                quadrature_welfare(p, lam, "woman", "private"), abs=1e-9
            )
            assert expected_welfare_man(p, lam) == pytest.approx(
                quadrature_welfare(p, lam, "man", "private"), abs=1e-9
            )


def test_quadrature_refutes_as_printed_man_curve(p0):
    exact = quadrature_welfare(p0, 0.5, "man", "private")
    as_printed = expected_welfare_man(p0, 0.5, FormulaVariant.AS_PRINTED)
    assert abs(as_printed - exact) > 0.1


def test_monte_carlo_confirms_both_welfare_curves(p0):
    for agent, fn in (("woman", expected_welfare_woman), ("man", expected_welfare_man)):
        est = mc_welfare(p0, 0.45, agent, "private", McConfig(n=300_000, seed=13))
        assert abs(est.mean - fn(p0, 0.45)) <= 3 * est.stderr


def test_woman_optimal_penalty_cases(p0):
    assert woman_optimal_penalty(p0) == pytest.approx(0.9, abs=1e-15)
    assert woman_optimal_penalty(ModelParams(G=1.0, k=9.0, M=0.09)) == 0.0
    # boundary where both welfare levels vanish: (1+k)^2 M = 4 exactly
    assert woman_optimal_penalty(ModelParams(G=1.0, k=7.0, M=0.0625)) == 0.0


def test_critical_gratification_values(p0):
    assert critical_gratification(p0) == pytest.approx(0.10833333333333335, abs=1e-12)
    assert critical_gratification(ModelParams(G=1.0, k=9.0, M=0.09, mu=0.5)) == pytest.approx(
        -0.125, abs=1e-12
    )
    boundary = ModelParams(G=1.0, k=7.0, M=0.0625, mu=0.5)
    assert critical_gratification(boundary) == 0.0


def test_welfare_optimal_penalty_cases(p0):
    assert welfare_optimal_penalty(p0).penalty == 0.0
    small_g = ModelParams(G=0.05, k=2.0, M=0.3, mu=0.5)
    opt = welfare_optimal_penalty(small_g)
    assert opt.penalty == pytest.approx(0.045, abs=1e-15)
    assert opt.penalty == deterrence_penalty(small_g)
    hostile = ModelParams(G=1.0, k=9.0, M=0.09, mu=0.5)
    for g in (0.01, 0.1, 1.0, 10.0):
        p = ModelParams(G=g, k=9.0, M=0.09, mu=0.5)
        assert welfare_optimal_penalty(p).penalty == 0.0
    assert critical_gratification(hostile) < 0


def test_welfare_optimal_penalty_is_bang_bang():
    rng = np.random.default_rng(73)
    for _ in range(200):
        p = random_params(rng)
        opt = welfare_optimal_penalty(p)
        assert opt.penalty in (0.0, deterrence_penalty(p))


def test_probabilities_step_at_deterrence_level(p0):
    live = pareto_probabilities(p0, 0.5)
    assert (live.phi_pi, live.phi_pc, live.phi_pd) == pytest.approx(
        (0.3, 0.7, 0.0), abs=1e-12
    )
    dead = pareto_probabilities(p0, deterrence_penalty(p0))
    assert (dead.phi_pi, dead.phi_pc, dead.phi_pd) == (0.0, 0.0, 0.0)


def test_improving_share_always_smaller_than_conflicting():
    rng = np.random.default_rng(74)
    for _ in range(200):
        p = random_params(rng)
        pr = pareto_probabilities(p, deterrence_penalty(p) / 2)
        assert pr.phi_pi < pr.phi_pc


def test_consent_analysis_p0(p0):
    res = consent_analysis(p0, 0.5)
    assert (res.probabilities.phi_pi, res.probabilities.phi_pc) == pytest.approx(
        (0.3, 0.7), abs=1e-12
    )
    assert res.value == pytest.approx(-0.4, abs=1e-12)
    assert res.baseline == 0.0
    assert res.min_optimal_penalty == deterrence_penalty(p0)


def test_consent_analysis_after_deterrence(p0):
    res = consent_analysis(p0, 2.0)
    assert res.probabilities.phi_pi == res.probabilities.phi_pc == 0.0
    assert res.value == res.baseline == 0.0


def test_consent_minimum_scales_with_gratification():
    doubled = ModelParams(G=2.0, k=2.0, M=0.3)
    assert consent_analysis(doubled, 0.5).min_optimal_penalty == pytest.approx(
        1.8, abs=1e-15
    )


def test_consent_analysis_rejects_axiom_violations(p0):
    with pytest.raises(ObjectiveError):
        consent_analysis(p0, 0.5, lambda phi_pi, phi_pc, phi_pd: 1.5 * phi_pi - phi_pc - phi_pd)
    with pytest.raises(ObjectiveError):
        consent_analysis(p0, 0.5, lambda phi_pi, phi_pc, phi_pd: phi_pc)


def test_shutdown_beats_participation_for_compliant_objectives():
    rng = np.random.default_rng(75)
    for _ in range(50):
        p = random_params(rng)
        res = consent_analysis(p, deterrence_penalty(p) * 0.37)
        assert res.value < res.baseline
