# -*- coding: utf-8 -*-
"""
semimod computes with semimodules over the numerical semigroup <alpha, beta>
"""

from .algebra import (
    LeanSet,
    NumericalSemigroup,
    PathMatrix,
    dual,
    enumerate_classes,
    lean_to_matrix,
    matrix_to_lean,
    normalize,
    resolution_degrees,
    syzygy,
)
from .pipelines.census import CensusPipeline, CensusPipelineInput


def semigroup(alpha: int, beta: int) -> NumericalSemigroup:
    """Shorthand for NumericalSemigroup(alpha, beta)"""
    return NumericalSemigroup(alpha, beta)


__all__ = [
    "CensusPipeline",
    "CensusPipelineInput",
    "LeanSet",
    "NumericalSemigroup",
    "PathMatrix",
    "dual",
    "enumerate_classes",
    "lean_to_matrix",
    "matrix_to_lean",
    "normalize",
    "resolution_degrees",
    "semigroup",
    "syzygy",
]
