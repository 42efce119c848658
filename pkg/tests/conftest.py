"""
Shared pytest fixtures for the seqalg test suite.

Design principles:
- Exact arithmetic only: every expected value is an int or a Fraction, never a float
  (the two float demonstrations compare with pytest.approx).
- Property tests use hypothesis with a derandomized profile so CI runs are reproducible.
- CLI tests go through `main(argv)` and read stdout/stderr with capsys; no subprocesses.
"""
import os
import sys

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

# ---------------------------------------------------------------------------
# Environment defaults, set before any seqalg module is imported
# ---------------------------------------------------------------------------
os.environ.setdefault("SEQALG_LOG_LEVEL", "WARNING")
os.environ.setdefault("SEQALG_RECURSION_LIMIT", "20000")

from seqalg.config import settings  # noqa: E402

# Lazy coefficient demand recurses through every cell of an expression.
if sys.getrecursionlimit() < settings.recursion_limit:
    sys.setrecursionlimit(settings.recursion_limit)

hypothesis_settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "ci"))


# ---------------------------------------------------------------------------
# Sequences used across modules
# ---------------------------------------------------------------------------
@pytest.fixture
def squares():
    """0, 1, 4, 9, ... as an infinite sequence."""
    from fractions import Fraction

    from seqalg.seq_core import Seq

    return Seq(lambda n: Fraction(n * n), None, "squares")


@pytest.fixture
def fib_lode():
    """s(n+2) = s(n+1) + s(n) with s0 = s1 = 1."""
    from seqalg.linear import Lode

    return Lode(b=[-1, -1, 1], inits=[1, 1])


@pytest.fixture
def small_matrix():
    from seqalg.linear import Matrix

    return Matrix([[1, 2], [3, 4]])
