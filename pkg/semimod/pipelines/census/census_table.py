from typing import Any, List

from semimod.algebra.selfdual import CensusReport, CensusResult
from semimod.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit


class CensusTable(BaseLogicUnit):
    """
    Collects the per-semigroup results into the final report
    """

    def execute(self, input: List[CensusResult], **kwargs) -> Any:
        report = CensusReport(list(input))

        return LogicUnitOutput(
            report,
            True,
            "Census table built",
            {"rows": report.to_dataframe().values.tolist(), "matches": report.matches},
            final_track_output=True,
        )
