import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from nerverep.complex import build_complex  # noqa: E402
from nerverep.fixtures import load  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def complexes(max_vertices=6, max_faces=6, max_size=4):
    """Hypothesis strategy for small complexes on labels ``1..max_vertices``."""
    face = st.sets(st.integers(1, max_vertices), min_size=1, max_size=max_size)
    return st.lists(face, min_size=1, max_size=max_faces).map(build_complex)


@pytest.fixture(scope="session")
def fig1():
    return load("fig1")


@pytest.fixture(scope="session")
def fig2():
    return load("fig2")


@pytest.fixture(scope="session")
def spider():
    return load("spider")


@pytest.fixture(scope="session")
def mobius():
    return load("mobius")


@pytest.fixture(scope="session")
def path4():
    return load("path4")


@pytest.fixture(scope="session")
def delta2():
    return load("delta2")


@pytest.fixture(scope="session")
def bd2():
    return load("boundary_delta2")


def F(*labels):
    return frozenset(str(x) for x in labels)


def faces_of(*specs):
    """``faces_of("123", "14")`` -> set of frozensets of single-character labels."""
    return {frozenset(s) for s in specs}


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
