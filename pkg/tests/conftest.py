import pytest

from semimod.algebra.semigroup import NumericalSemigroup
from semimod.algebra.semimodule import LeanSet


@pytest.fixture
def gamma57():
    return NumericalSemigroup(5, 7)


@pytest.fixture
def example_lean(gamma57):
    # gaps 8, 6, 9 have coordinates (4,1), (3,2), (1,3)
    return LeanSet.from_gaps(gamma57, [9, 6, 8])


@pytest.fixture
def example_dual_lean(gamma57):
    return LeanSet.from_gaps(gamma57, [1, 2, 3])


@pytest.fixture
def no_config_file(monkeypatch, tmp_path):
    """Run from an empty workspace so no semimod.json is picked up."""
    monkeypatch.setenv("SEMIMOD_WORKSPACE", str(tmp_path))
    monkeypatch.chdir(tmp_path)
    return tmp_path
