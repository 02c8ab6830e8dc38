import json
from pathlib import Path

import pytest

from jacring.matrixgen import GenConfig, generate_matrix
from jacring.pipeline import Pipeline
from jacring.scalar import QQ

FIXTURES = Path(__file__).parent / "fixtures"
LAMBDA = list(range(1, 9))


@pytest.fixture(scope="session")
def oracle():
    """Values frozen from tests/oracles/sympy_oracle.py."""
    return json.loads((FIXTURES / "oracle_lambda_1_8.json").read_text())


@pytest.fixture(scope="session")
def hyper_matrix():
    return generate_matrix(GenConfig("hyperelliptic", field=QQ), user_lambda=LAMBDA)


@pytest.fixture(scope="session")
def hyper(hyper_matrix):
    """The lambda = (1..8) pipeline over QQ; stages are computed once per session."""
    return Pipeline(hyper_matrix)


@pytest.fixture(scope="session")
def jr(hyper):
    return hyper.jr


@pytest.fixture(scope="session")
def basis(hyper):
    return hyper.basis


@pytest.fixture(scope="session")
def theta(hyper):
    return hyper.theta


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""
    import contextlib
    import time

    @contextlib.contextmanager
    def check(number, title):
        t0 = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            line = f"criterion {number} FAIL ({time.perf_counter() - t0:.1f}s) {title}: {type(exc).__name__}: {exc}"
            ACCEPTANCE_LINES.append(line.splitlines()[0])
            print(ACCEPTANCE_LINES[-1])
            raise
        line = f"criterion {number} PASS ({time.perf_counter() - t0:.1f}s) {title}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
