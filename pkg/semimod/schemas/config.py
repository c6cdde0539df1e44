from typing import Literal

from semimod.constants import (
    DEFAULT_MAX_SUM,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_RESOLUTION_STEPS,
    DEFAULT_SVG_CELL_SIZE,
    MIN_SEMIGROUP_SUM,
)
from semimod.pydantic import BaseModel, validator


class Config(BaseModel):
    save_logs: bool = False
    verbose: bool = False
    output_format: Literal["json", "tsv", "text"] = DEFAULT_OUTPUT_FORMAT
    max_sum: int = DEFAULT_MAX_SUM
    resolution_steps: int = DEFAULT_RESOLUTION_STEPS
    oracle_check: bool = False
    svg_cell_size: float = DEFAULT_SVG_CELL_SIZE

    @validator("max_sum")
    def validate_max_sum(cls, max_sum: int) -> int:
        if max_sum < MIN_SEMIGROUP_SUM:
            raise ValueError(
                f"max_sum must be at least {MIN_SEMIGROUP_SUM} (the sum for <2,3>)"
            )
        return max_sum

    @validator("resolution_steps")
    def validate_resolution_steps(cls, steps: int) -> int:
        if steps < 1:
            raise ValueError("resolution_steps must be positive")
        return steps

    @validator("svg_cell_size")
    def validate_svg_cell_size(cls, size: float) -> float:
        if size <= 0:
            raise ValueError("svg_cell_size must be positive")
        return size
