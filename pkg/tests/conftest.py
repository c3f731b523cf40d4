"""
Pytest configuration and shared fixtures.
"""

import tempfile
from pathlib import Path

import pytest

from src.incarnation import MEMO, IncarnationParams


@pytest.fixture
def temp_dir():
    """Create a temporary directory for testing."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def params2():
    """Incarnation parameters for N=2."""
    return IncarnationParams(2)


@pytest.fixture
def params3():
    """Incarnation parameters for N=3, epsilon=+1."""
    return IncarnationParams(3, 1)


@pytest.fixture
def params4():
    """Incarnation parameters for N=4."""
    return IncarnationParams(4)


@pytest.fixture
def params5():
    """Incarnation parameters for N=5, epsilon=+1."""
    return IncarnationParams(5, 1)


@pytest.fixture
def run_preset(temp_dir):
    """Write a small run preset and return its path."""
    path = temp_dir / "run.yml"
    path.write_text(
        "epsilon: both\n"
        "verify:\n"
        "  N: \"2..3\"\n"
        "  modules: \"empty,V\"\n"
        "analyze:\n"
        "  N: \"3\"\n"
        "  r: \"2\"\n",
        encoding="utf-8",
    )
    return path


@pytest.fixture(autouse=True)
def reset_environment(monkeypatch):
    """Reset environment variables before each test."""
    for name in ("SPINBRAUER_CONFIG", "SPINBRAUER_CACHE", "SPINBRAUER_JOBS"):
        monkeypatch.delenv(name, raising=False)
    yield
    MEMO.attach(None)
