from .base import BaseReport
from .command_reports import (
    CensusTextReport,
    DualReport,
    GapsReport,
    LeanReport,
    MatrixReport,
    OrbitReport,
    PathReport,
    ResolutionReport,
    SyzygyReport,
)

__all__ = [
    "BaseReport",
    "CensusTextReport",
    "DualReport",
    "GapsReport",
    "LeanReport",
    "MatrixReport",
    "OrbitReport",
    "PathReport",
    "ResolutionReport",
    "SyzygyReport",
]
