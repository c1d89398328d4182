import numpy as np
import pytest

from deltawells import equidistant_system, validate_system


def random_system(rng, n_max=6, n_min=1, min_gap=0.3, span=6.0, strengths=(0.3, 3.0)):
    """Random attractive system with gaps of at least ``min_gap``."""
    n = int(rng.integers(n_min, n_max + 1))
    gaps = min_gap + rng.random(max(n - 1, 0)) * span / max(n - 1, 1)
    centers = np.concatenate([[0.0], np.cumsum(gaps)]) + rng.uniform(-2, 2)
    lam = rng.uniform(*strengths, size=n)
    return validate_system(centers, lam)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def twin():
    # two lambda=2 wells at distance 2: g = 1, a g = 2, two bound states
    return validate_system([0.0, 2.0], [2.0, 2.0])


@pytest.fixture
def chain3():
    return equidistant_system(3, 3.0, 1.0)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
