from dataclasses import dataclass
from typing import Any


@dataclass
class LogicUnitOutput:
    """
    Pipeline step output
    """

    output: Any = None
    success: bool = False
    message: str = None
    metadata: dict = None
    final_track_output: bool = False
