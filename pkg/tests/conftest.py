import os
import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

SEED = int(os.environ.get("GOLOMB_LAB_SEED", "20171"))

# Hypothesis runs derandomized; GOLOMB_LAB_SEED drives the `rng` fixture.
settings.register_profile("golomb", max_examples=150, deadline=None, derandomize=True)
settings.load_profile("golomb")

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
