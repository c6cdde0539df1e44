from dataclasses import dataclass, field
from typing import Optional, Type

import pandas as pd

from semimod.constants import OUTPUT_FORMATS
from semimod.exceptions import InvalidConfigError
from semimod.reports.base import BaseReport


@dataclass
class OutputEnvelope:
    """
    Result of one command, ready to be written in any output format.

    `payload` is the json document, `rows` the tsv table and `report` the
    text report class rendered with the payload as template variables.
    """

    format: str
    payload: dict = field(default_factory=dict)
    rows: Optional[pd.DataFrame] = None
    report: Optional[Type[BaseReport]] = None

    def __post_init__(self):
        if self.format not in OUTPUT_FORMATS:
            raise InvalidConfigError(
                f"Unknown output format '{self.format}', "
                f"expected one of {', '.join(OUTPUT_FORMATS)}"
            )
