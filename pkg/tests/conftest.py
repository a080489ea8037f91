import numpy as np
import pytest
from hypothesis import settings

from frftcrypt import EvaluationGrid, SampledSignal

settings.register_profile("default", max_examples=50, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def gaussian(t):
    return np.exp(-np.pi * np.asarray(t) ** 2)


@pytest.fixture
def gauss_signal():
    return SampledSignal.from_function(gaussian, EvaluationGrid.centered(0.05, 512))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
