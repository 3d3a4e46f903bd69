from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from rbkit.diagrams import enumerate_diagrams

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

_BASES = {k: enumerate_diagrams(k) for k in range(5)}


def basis(k: int):
    return _BASES[k]


@st.composite
def diagrams_of(draw, k: int | None = None, max_k: int = 4):
    size = draw(st.integers(0, max_k)) if k is None else k
    return draw(st.sampled_from(_BASES[size]))


@st.composite
def diagram_pairs(draw, max_k: int = 4, arity: int = 2):
    k = draw(st.integers(0, max_k))
    return tuple(draw(st.sampled_from(_BASES[k])) for _ in range(arity))


@pytest.fixture
def example4_path() -> Path:
    return DATA / "example4.json"


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
