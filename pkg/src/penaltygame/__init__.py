"""Stackelberg analysis of unwelcome proposals under a rejection penalty.

A proposer of type theta_m decides whether to make an advance; a
responder of type theta_w accepts or rejects it knowing a penalty lam
punishes the proposer when a rejected advance is reported. The package
computes the equilibrium under complete and private information, the
resulting welfare curves, the Pareto categorization of interactions, and
the penalties favored by the welfare and consent approaches, with
independent quadrature, Monte Carlo, and grid oracles cross-checking
every closed form.

Complete-information results live in complete_info, welfare, and consent;
the private-information regime mirrors those names inside private_info.
Names shared by both regimes (pareto_probabilities, woman_optimal_penalty,
welfare_optimal_penalty, critical_gratification) are deliberately not
re-exported flat; call them through their module.
"""

from . import complete_info, config, consent, core, oracles, private_info, tables, verify, welfare
from .complete_info import RegionMap, Thresholds, equilibrium_outcome, region_map, thresholds
from .consent import (
    AxiomCheck,
    LinearConsent,
    ObjectiveError,
    OptimumError,
    ParetoProbabilities,
    check_mon,
    check_rme,
    consent_optimal_penalty,
    consent_value,
)
from .core import (
    AgentTypes,
    DomainError,
    EquilibriumOutcome,
    ModelParams,
    OutcomePath,
    ParetoClass,
    PayoffPair,
    classify_pareto,
    require_valid,
    validate_params,
)
from .oracles import (
    GridArgmax,
    McConfig,
    McEstimate,
    McProbabilities,
    grid_argmax,
    mc_pareto_probabilities,
    mc_welfare,
    quadrature_welfare,
)
from .private_info import BayesEquilibrium, bayes_equilibrium, deterrence_penalty
from .verify import CheckResult, VerifyReport, verify_report
from .welfare import (
    FormulaVariant,
    WelfareOptimum,
    man_welfare,
    social_welfare,
    woman_welfare,
)

__all__ = [
    "AgentTypes",
    "AxiomCheck",
    "BayesEquilibrium",
    "CheckResult",
    "DomainError",
    "EquilibriumOutcome",
    "FormulaVariant",
    "GridArgmax",
    "LinearConsent",
    "McConfig",
    "McEstimate",
    "McProbabilities",
    "ModelParams",
    "ObjectiveError",
    "OptimumError",
    "OutcomePath",
    "ParetoClass",
    "ParetoProbabilities",
    "PayoffPair",
    "RegionMap",
    "Thresholds",
    "VerifyReport",
    "WelfareOptimum",
    "bayes_equilibrium",
    "check_mon",
    "check_rme",
    "classify_pareto",
    "complete_info",
    "config",
    "consent",
    "consent_optimal_penalty",
    "consent_value",
    "core",
    "deterrence_penalty",
    "equilibrium_outcome",
    "grid_argmax",
    "man_welfare",
    "mc_pareto_probabilities",
    "mc_welfare",
    "oracles",
    "private_info",
    "quadrature_welfare",
    "region_map",
    "require_valid",
    "social_welfare",
    "tables",
    "thresholds",
    "validate_params",
    "verify",
    "verify_report",
    "welfare",
    "woman_welfare",
]
