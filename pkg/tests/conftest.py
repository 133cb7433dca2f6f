import json
from pathlib import Path

import pytest

from gkzmod.polyalgebra import parse_polynomial
from gkzmod.toric import ProblemSpec

ROOT = Path(__file__).resolve().parent.parent
PROBLEMS = ROOT / "problems"


def load_spec(name):
    data = json.loads((PROBLEMS / name).read_text())
    return ProblemSpec(data["A"], data["beta"], data["w"])


@pytest.fixture
def airy():
    return ProblemSpec([[1, 3]], ["-1"], [-1, 0])


@pytest.fixture
def bessel321():
    return ProblemSpec([[-1, 1, 2]], ["1/2"], [3, 2, 1])


@pytest.fixture
def bessel_neg():
    return ProblemSpec([[-1, 1, 2]], ["1/2"], [-2, -1, 0])


def P(text, ring):
    return parse_polynomial(text, ring)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import REPORT

    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
