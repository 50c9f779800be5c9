"""One-stop cross-examination of every closed form against the oracles.

verify_report runs the whole battery for a single parameter point: welfare
curves against piecewise-exact quadrature and Monte Carlo, category
probabilities against sampled classification frequencies, every threshold
against a bisection root, every optimizer against an exhaustive grid, the
branch joins for continuity, and the known as-printed/rederived formula
discrepancies.

Discrepancy checks are annotated expect_fail: the report marks them
"known-discrepancy" when they fail (the healthy state) and
"unexpected-pass" when they suddenly agree. The report is ok iff every
check lands on pass or known-discrepancy, so a silent formula regression
anywhere flips the overall status.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from . import complete_info, consent, private_info, welfare
from .core import ModelParams, validate_params
from .oracles import (
    McConfig,
    _integrate,
    grid_argmax,
    mc_pareto_probabilities,
    mc_welfare,
    quadrature_welfare,
)
from .welfare import FormulaVariant

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_KNOWN = "known-discrepancy"
STATUS_UNEXPECTED = "unexpected-pass"


@dataclass(frozen=True)
class CheckResult:
    check: str
    expected: float
    actual: float
    tol: float
    status: str

    @property
    def ok(self) -> bool:
        return self.status in (STATUS_PASS, STATUS_KNOWN)


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.checks:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def to_table_text(self) -> str:
        rows = [("check", "expected", "actual", "tol", "status")]
        for c in self.checks:
            rows.append(
                (c.check, f"{c.expected:.9g}", f"{c.actual:.9g}", f"{c.tol:.3g}", c.status)
            )
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = []
        for idx, r in enumerate(rows):
            lines.append("  ".join(s.ljust(w) for s, w in zip(r, widths)).rstrip())
            if idx == 0:
                lines.append("  ".join("-" * w for w in widths))
        summary = ", ".join(f"{v} {k}" for k, v in sorted(self.counts().items()))
        lines.append("")
        lines.append(f"overall: {'ok' if self.ok else 'FAIL'} ({summary})")
        return "\n".join(lines) + "\n"

    def to_json_text(self) -> str:
        def num(x: float):
            return x if math.isfinite(x) else None

        doc = {
            "overall": "ok" if self.ok else "fail",
            "checks": [
                {
                    "check": c.check,
                    "expected": num(c.expected),
                    "actual": num(c.actual),
                    "tol": num(c.tol),
                    "status": c.status,
                }
                for c in self.checks
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def _check(
    name: str, expected: float, actual: float, tol: float, expect_fail: bool = False
) -> CheckResult:
    agree = (
        math.isfinite(expected)
        and math.isfinite(actual)
        and abs(actual - expected) <= tol
    )
    if expect_fail:
        status = STATUS_UNEXPECTED if agree else STATUS_KNOWN
    else:
        status = STATUS_PASS if agree else STATUS_FAIL
    return CheckResult(check=name, expected=expected, actual=actual, tol=tol, status=status)


def _complete_lambdas(p: ModelParams) -> tuple[float, ...]:
    t = complete_info.thresholds(p)
    lw = welfare.woman_optimal_penalty(p)
    return (
        0.0,
        t.lambda_pc / 2.0,
        t.lambda_pc,
        (t.lambda_pc + t.lambda_pi) / 2.0,
        t.lambda_pi,
        lw,
        2.0 * lw,
    )


def _private_lambdas(p: ModelParams) -> tuple[float, ...]:
    lb = private_info.deterrence_penalty(p)
    return (0.0, lb / 4.0, lb / 2.0, 3.0 * lb / 4.0, lb, 1.5 * lb, 3.0 * lb)


def _threshold_roots(p: ModelParams) -> dict[str, float]:
    """Re-derive every threshold as a bisection root of its defining equation."""
    g, k, m = p.G, p.k, p.M
    avg_m = _integrate(lambda tm: tm, 0.0, m) / m
    roots = {
        "lambda_pc": brentq(lambda lam: g / lam - (1.0 + k) * m, 1e-12, 1e12, xtol=1e-12),
        "lambda_pi": brentq(lambda lam: g / lam - k * m, 1e-12, 1e12, xtol=1e-12),
        # responder indifference: accept minus refuse expectation over theta_m
        "theta_w_accept": brentq(
            lambda x: (k * avg_m - x) - (-avg_m), 0.0, 1.0, xtol=1e-12
        ),
        "theta_w_breakeven": brentq(lambda x: k * avg_m - x, 0.0, 1.0, xtol=1e-12),
    }
    theta_a = roots["theta_w_accept"]
    roots["lambda_bar"] = brentq(
        lambda lam: _integrate(lambda tw: g - lam * tw, 0.0, theta_a)
        + _integrate(lambda tw: -lam * tw, theta_a, 1.0),
        0.0,
        1e12,
        xtol=1e-12,
    )
    return roots


def verify_report(p: ModelParams, mc: McConfig | None = None) -> VerifyReport:
    violations = validate_params(p)
    if violations:
        return VerifyReport(
            checks=tuple(
                CheckResult(f"params/{v}", math.nan, math.nan, 0.0, STATUS_FAIL)
                for v in violations
            )
        )
    if mc is None:
        mc = McConfig()
    checks: list[CheckResult] = []
    t = complete_info.thresholds(p)
    lw = welfare.woman_optimal_penalty(p)
    lam_bar = private_info.deterrence_penalty(p)
    mid = (t.lambda_pc + t.lambda_pi) / 2.0

    # closed forms vs piecewise-exact quadrature
    for lam in _complete_lambdas(p):
        checks.append(
            _check(
                f"woman-welfare-complete/quadrature @ lam={lam:.6g}",
                quadrature_welfare(p, lam, "woman", "complete"),
                welfare.woman_welfare(p, lam),
                1e-9,
            )
        )
        checks.append(
            _check(
                f"man-welfare-complete/quadrature @ lam={lam:.6g}",
                quadrature_welfare(p, lam, "man", "complete"),
                welfare.man_welfare(p, lam),
                1e-9,
            )
        )
    for lam in _private_lambdas(p):
        checks.append(
            _check(
                f"woman-welfare-private/quadrature @ lam={lam:.6g}",
                quadrature_welfare(p, lam, "woman", "private"),
                private_info.expected_welfare_woman(p, lam),
                1e-9,
            )
        )
        checks.append(
            _check(
                f"man-welfare-private/quadrature @ lam={lam:.6g}",
                quadrature_welfare(p, lam, "man", "private"),
                private_info.expected_welfare_man(p, lam),
                1e-9,
            )
        )

    # closed forms vs Monte Carlo (3 standard errors)
    for lam in (t.lambda_pc / 2.0, mid):
        for agent, fn in (("woman", welfare.woman_welfare), ("man", welfare.man_welfare)):
            est = mc_welfare(p, lam, agent, "complete", mc)
            checks.append(
                _check(
                    f"{agent}-welfare-complete/monte-carlo @ lam={lam:.6g}",
                    fn(p, lam),
                    est.mean,
                    3.0 * est.stderr,
                )
            )
    for agent, fn in (
        ("woman", private_info.expected_welfare_woman),
        ("man", private_info.expected_welfare_man),
    ):
        est = mc_welfare(p, lam_bar / 2.0, agent, "private", mc)
        checks.append(
            _check(
                f"{agent}-welfare-private/monte-carlo @ lam={lam_bar / 2.0:.6g}",
                fn(p, lam_bar / 2.0),
                est.mean,
                3.0 * est.stderr,
            )
        )

    # category probabilities vs sampled classification frequencies
    for lam in (0.6 * t.lambda_pc, mid, 1.2 * t.lambda_pi):
        probs = consent.pareto_probabilities(p, lam)
        est = mc_pareto_probabilities(p, lam, "complete", mc)
        for nm, closed, e in (
            ("pi", probs.phi_pi, est.phi_pi),
            ("pc", probs.phi_pc, est.phi_pc),
            ("pd", probs.phi_pd, est.phi_pd),
        ):
            checks.append(
                _check(
                    f"phi-{nm}-complete/monte-carlo @ lam={lam:.6g}",
                    closed,
                    e.mean,
                    3.0 * e.stderr,
                )
            )
    probs = private_info.pareto_probabilities(p, lam_bar / 2.0)
    est = mc_pareto_probabilities(p, lam_bar / 2.0, "private", mc)
    for nm, closed, e in (
        ("pi", probs.phi_pi, est.phi_pi),
        ("pc", probs.phi_pc, est.phi_pc),
        ("pd", probs.phi_pd, est.phi_pd),
    ):
        checks.append(
            _check(
                f"phi-{nm}-private/monte-carlo @ lam={lam_bar / 2.0:.6g}",
                closed,
                e.mean,
                3.0 * e.stderr,
            )
        )

    # continuity at the branch joins
    checks.append(
        _check(
            "woman-welfare-complete/branch-join @ lambda-pc",
            welfare._woman_flat(p),
            welfare._woman_tail(p, t.lambda_pc),
            1e-9,
        )
    )
    checks.append(
        _check(
            "man-welfare-complete/branch-join @ lambda-pc",
            welfare._man_flat(p, t.lambda_pc),
            welfare._man_tail(p, t.lambda_pc),
            1e-9,
        )
    )
    checks.append(
        _check(
            "phi-pc/branch-join @ lambda-pc",
            p.M / 2.0,
            consent._phi_pc_mid(p, t.lambda_pc),
            1e-9,
        )
    )
    checks.append(
        _check(
            "phi-pc/branch-join @ lambda-pi",
            consent._phi_pc_mid(p, t.lambda_pi),
            consent._phi_pc_tail(p, t.lambda_pi),
            1e-9,
        )
    )
    checks.append(
        _check(
            "phi-pi/branch-join @ lambda-pi",
            p.k * p.M / 2.0,
            consent._phi_pi_tail(p, t.lambda_pi),
            1e-9,
        )
    )

    # thresholds vs bisection roots
    roots = _threshold_roots(p)
    eq = private_info.bayes_equilibrium(p, 0.0)
    for nm, formula in (
        ("lambda-pc", t.lambda_pc),
        ("lambda-pi", t.lambda_pi),
        ("theta-w-accept", eq.theta_w_accept),
        ("theta-w-breakeven", eq.theta_w_breakeven),
        ("lambda-bar", eq.lambda_bar),
    ):
        checks.append(
            _check(f"{nm}/bisection", roots[nm.replace('-', '_')], formula, 1e-6)
        )

    # optimizers vs exhaustive grids
    step = lw / 2000.0
    g = grid_argmax(
        lambda lam: welfare.woman_welfare(p, lam), 0.0, 2.0 * lw, step, refine=True
    )
    checks.append(_check("woman-optimal-penalty/grid-argmax", g.argmax, lw, step))

    opt = welfare.welfare_optimal_penalty(p)
    g = grid_argmax(lambda lam: welfare.social_welfare(p, lam), 0.0, 2.0 * lw, step)
    scale = max(1.0, abs(g.value))
    checks.append(
        _check("welfare-optimal-penalty/value-vs-grid", g.value, opt.value, 1e-6 * scale)
    )

    popt = private_info.welfare_optimal_penalty(p)
    g = grid_argmax(
        lambda lam: private_info.expected_social_welfare(p, lam),
        0.0,
        2.0 * lam_bar,
        lam_bar / 2000.0,
    )
    checks.append(
        _check(
            "private-welfare-optimal-penalty/value-vs-grid",
            g.value,
            float(private_info.expected_social_welfare(p, popt.penalty)),
            1e-9,
        )
    )

    if 0.0 < p.alpha <= 1.0:
        ls = consent.consent_optimal_penalty(p)
        step = ls / 2000.0
        g = grid_argmax(
            lambda lam: consent.consent_value(p, lam), 0.0, 2.0 * ls, step, refine=True
        )
        checks.append(_check("consent-optimal-penalty/grid-argmax", g.argmax, ls, step))
    else:
        checks.append(
            CheckResult(
                "consent-optimal-penalty/alpha-in-(0,1]",
                math.nan,
                p.alpha,
                0.0,
                STATUS_FAIL,
            )
        )

    # known formula discrepancies: failing is the healthy state
    curve_peak = welfare.woman_welfare(p, lw)
    checks.append(
        _check(
            "peak-woman-welfare/rederived-vs-curve",
            curve_peak,
            welfare.woman_welfare_at_optimum(p, FormulaVariant.REDERIVED),
            1e-9,
        )
    )
    checks.append(
        _check(
            "peak-woman-welfare/rederived-vs-quadrature",
            quadrature_welfare(p, lw, "woman", "complete"),
            welfare.woman_welfare_at_optimum(p, FormulaVariant.REDERIVED),
            1e-9,
        )
    )
    checks.append(
        _check(
            "peak-woman-welfare/as-printed-vs-curve",
            curve_peak,
            welfare.woman_welfare_at_optimum(p, FormulaVariant.AS_PRINTED),
            1e-9,
            expect_fail=True,
        )
    )
    checks.append(
        _check(
            "critical-gratification/as-printed-vs-rederived",
            welfare.critical_gratification(p, FormulaVariant.REDERIVED),
            welfare.critical_gratification(p, FormulaVariant.AS_PRINTED),
            1e-9,
            expect_fail=True,
        )
    )
    checks.append(
        _check(
            "critical-weight/as-printed-vs-rederived",
            welfare.critical_weight(p, FormulaVariant.REDERIVED),
            welfare.critical_weight(p, FormulaVariant.AS_PRINTED),
            1e-9,
            expect_fail=True,
        )
    )
    checks.append(
        _check(
            f"man-welfare-private/as-printed-vs-quadrature @ lam={lam_bar / 2.0:.6g}",
            quadrature_welfare(p, lam_bar / 2.0, "man", "private"),
            private_info.expected_welfare_man(p, lam_bar / 2.0, FormulaVariant.AS_PRINTED),
            1e-9,
            expect_fail=True,
        )
    )

    return VerifyReport(checks=tuple(checks))
