"""
Lazy import of the packages behind the poetry extras.

semimod computes everything with the core dependencies; an extra only adds
an output channel (matplotlib for `path --svg`). The extra is imported when
the channel is used, so a plain install keeps working for everything else.
"""

from __future__ import annotations

import importlib
import sys
import warnings
from dataclasses import dataclass
from types import ModuleType
from typing import Dict, Optional

from pandas.util.version import Version


@dataclass(frozen=True)
class OptionalDependency:
    min_version: str
    extra: str


# Keyed by the top-level import name
OPTIONAL_DEPENDENCIES: Dict[str, OptionalDependency] = {
    "matplotlib": OptionalDependency(min_version="3.7.1", extra="svg"),
}


def get_version(module: ModuleType) -> str:
    version = getattr(module, "__version__", None)
    if version is None:
        raise ImportError(f"Can't determine version for {module.__name__}")
    return version


def _too_old(parent: str, required: str, installed: str) -> str:
    return (
        f"semimod requires version '{required}' or newer of '{parent}' "
        f"(version '{installed}' currently installed)."
    )


def import_dependency(
    name: str,
    extra: str = "",
    errors: str = "raise",
    min_version: Optional[str] = None,
) -> Optional[ModuleType]:
    """
    Import `name`, a module of one of the optional dependencies.

    Args:
        name (str): module to import, submodules like "matplotlib.figure" are
            checked against the version of their top-level package.
        extra (str): sentence added to the error for a missing package.
        errors (str): "raise" (default) raises ImportError, "warn" warns and
            returns None for a package that is too old, "ignore" returns None
            for a missing package and the module for one that is too old.
        min_version (str, optional): overrides the registered minimum.

    Returns:
        Optional[ModuleType]: the module, or None as described for `errors`.
    """
    if errors not in {"raise", "warn", "ignore"}:
        raise ValueError(f"Unknown errors mode '{errors}'")

    parent = name.split(".")[0]
    dependency = OPTIONAL_DEPENDENCIES.get(parent)
    install = f"semimod[{dependency.extra}]" if dependency else parent

    try:
        module = importlib.import_module(name)
    except ImportError as exc:
        if errors == "raise":
            raise ImportError(
                f"Missing optional dependency '{parent}'. {extra} "
                f"Install it with `pip install {install}`."
            ) from exc
        return None

    required = min_version or (dependency.min_version if dependency else None)
    if not required:
        return module

    installed = get_version(sys.modules[parent])
    if Version(installed) >= Version(required):
        return module

    if errors == "raise":
        raise ImportError(_too_old(parent, required, installed))
    if errors == "warn":
        warnings.warn(_too_old(parent, required, installed), UserWarning)
        return None
    return module
