from typing import Any, List

from semimod.algebra.selfdual import expected_census
from semimod.algebra.semigroup import NumericalSemigroup
from semimod.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext


class ExpectedCounts(BaseLogicUnit):
    """
    Evaluates the closed counting formulas for every semigroup
    """

    def execute(self, input: List[NumericalSemigroup], **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")

        expected = {gamma: expected_census(gamma) for gamma in input}
        context.add("expected", expected)

        return LogicUnitOutput(
            input,
            True,
            "Expected counts computed",
            {str(gamma): counts for gamma, counts in expected.items()},
        )
