from typing import Any, List

from semimod.algebra.selfdual import observed_census
from semimod.algebra.semigroup import NumericalSemigroup
from semimod.helpers.logger import Logger
from semimod.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext


class SelfdualEnumeration(BaseLogicUnit):
    """
    Counts the selfdual classes of every semigroup by brute-force enumeration
    """

    def execute(self, input: List[NumericalSemigroup], **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")
        logger: Logger = kwargs.get("logger")

        observed = {}
        for gamma in input:
            observed[gamma] = observed_census(gamma)
            logger.log(
                f"{gamma}: {sum(observed[gamma].values())} selfdual classes "
                f"{observed[gamma]}"
            )

        context.add("observed", observed)

        return LogicUnitOutput(
            input,
            True,
            "Selfdual classes enumerated",
            {str(gamma): counts for gamma, counts in observed.items()},
        )
