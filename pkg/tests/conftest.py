import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from penaltygame import ModelParams

P0 = ModelParams(G=1.0, k=2.0, M=0.3, mu=0.5, alpha=1.0)


@pytest.fixture
def p0() -> ModelParams:
    return P0


def random_params(rng: np.random.Generator, alpha_max: float = 1.0) -> ModelParams:
    """One random parameter set satisfying every model assumption.

    M is drawn as u/(1+k) with u in (0.05, 0.95), which pins (1+k)M = u
    strictly below 1 no matter how k landed.
    """
    k = float(rng.uniform(0.05, 10.0))
    return ModelParams(
        G=float(rng.uniform(0.05, 5.0)),
        k=k,
        M=float(rng.uniform(0.05, 0.95)) / (1.0 + k),
        mu=float(rng.uniform(0.05, 0.95)),
        alpha=float(rng.uniform(0.05, alpha_max)),
    )


def param_sets(alpha_max: float = 1.0) -> st.SearchStrategy[ModelParams]:
    bounded = dict(allow_nan=False, allow_infinity=False)
    return st.builds(
        lambda g, k, u, mu, alpha: ModelParams(
            G=g, k=k, M=u / (1.0 + k), mu=mu, alpha=alpha
        ),
        st.floats(0.05, 5.0, **bounded),
        st.floats(0.05, 10.0, **bounded),
        st.floats(0.05, 0.95, **bounded),
        st.floats(0.05, 0.95, **bounded),
        st.floats(0.05, alpha_max, **bounded),
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance-criterion lines after the run, capture or not."""
    gate = sys.modules.get("test_acceptance")
    results = getattr(gate, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, ok in sorted(results):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number}: {description}")
