import os
import sys
from fractions import Fraction

import pytest

# Add src directory to Python path so imports work without installing
SRC_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
if SRC_DIR not in sys.path:
    sys.path.insert(0, SRC_DIR)

from harmonic_tutte.codes import LinearCode  # noqa: E402
from harmonic_tutte.core.config import get_settings  # noqa: E402
from harmonic_tutte.harmonic import HarmonicFunction  # noqa: E402
from harmonic_tutte.linalg import FieldMatrix  # noqa: E402

HAMMING_74 = [
    [1, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1],
]

EXTENDED_HAMMING_84 = [
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 1, 1, 0],
]


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    """No HTUTTE_* variables or .env file leak into a test."""
    for key in list(os.environ):
        if key.startswith("HTUTTE_"):
            monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def hamming74() -> LinearCode:
    return LinearCode(FieldMatrix.from_rows(2, HAMMING_74))


@pytest.fixture
def extended_hamming84() -> LinearCode:
    return LinearCode(FieldMatrix.from_rows(2, EXTENDED_HAMMING_84))


@pytest.fixture
def micro_code() -> LinearCode:
    """C = {000, 110}, generated by [1 1 0]."""
    return LinearCode(FieldMatrix.from_rows(2, [[1, 1, 0]]))


@pytest.fixture
def f13() -> HarmonicFunction:
    """f = {1} - {3} on three points."""
    return HarmonicFunction(3, 1, {(1,): Fraction(1), (3,): Fraction(-1)})


@pytest.fixture
def repetition5() -> LinearCode:
    return LinearCode(FieldMatrix.from_rows(2, [[1, 1, 1, 1, 1]]))
