import numpy as np
import pytest

from loopbraid.linalg import RHO


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


def random_conjugator(rng, n):
    # well-conditioned: unitary times a mild diagonal
    Z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    Q, _ = np.linalg.qr(Z)
    return Q @ np.diag(rng.uniform(0.5, 2.0, n))


__all__ = ["RHO", "random_conjugator"]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        ok, detail = RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
