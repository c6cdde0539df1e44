import sys
import types

import pytest

from semimod.helpers.optional import (
    OPTIONAL_DEPENDENCIES,
    OptionalDependency,
    import_dependency,
)


@pytest.fixture
def fakemodule(monkeypatch):
    module = types.ModuleType("fakemodule")
    module.__version__ = "0.9.0"
    monkeypatch.setitem(sys.modules, "fakemodule", module)
    monkeypatch.setitem(
        OPTIONAL_DEPENDENCIES, "fakemodule", OptionalDependency("1.0.0", "fake")
    )
    return module


def test_missing_registered_dependency_names_the_extra(monkeypatch):
    monkeypatch.setitem(
        OPTIONAL_DEPENDENCIES, "notapackage", OptionalDependency("1.0", "svg")
    )
    match = "Missing .*notapackage.* `pip install semimod\\[svg\\]`"
    with pytest.raises(ImportError, match=match) as exc_info:
        import_dependency("notapackage")
    assert isinstance(exc_info.value.__cause__, ImportError)


def test_missing_unregistered_dependency():
    with pytest.raises(ImportError, match="pip install notapackage`"):
        import_dependency("notapackage", extra="Needed for testing.")

    assert import_dependency("notapackage", errors="ignore") is None


def test_unknown_errors_mode():
    with pytest.raises(ValueError):
        import_dependency("json", errors="explode")


def test_unregistered_module_is_returned_without_version_check():
    import json

    assert import_dependency("json") is json


def test_matplotlib():
    pytest.importorskip("matplotlib")
    assert import_dependency("matplotlib.figure") is not None


def test_too_old(fakemodule):
    match = "semimod requires .*1.0.0.* of .fakemodule.*'0.9.0'"
    with pytest.raises(ImportError, match=match):
        import_dependency("fakemodule")

    assert import_dependency("fakemodule", min_version="0.8") is fakemodule
    assert import_dependency("fakemodule", errors="ignore") is fakemodule

    with pytest.warns(UserWarning):
        assert import_dependency("fakemodule", errors="warn") is None

    fakemodule.__version__ = "1.0.0"
    assert import_dependency("fakemodule") is fakemodule


def test_submodule_uses_parent_version(fakemodule, monkeypatch):
    submodule = types.ModuleType("submodule")
    fakemodule.submodule = submodule
    monkeypatch.setitem(sys.modules, "fakemodule.submodule", submodule)

    with pytest.raises(ImportError, match="of 'fakemodule'"):
        import_dependency("fakemodule.submodule")

    fakemodule.__version__ = "1.2.0"
    assert import_dependency("fakemodule.submodule") is submodule


def test_no_version_raises(fakemodule):
    del fakemodule.__version__

    with pytest.raises(ImportError, match="Can't determine .* fakemodule"):
        import_dependency("fakemodule")
