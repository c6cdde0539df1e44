import logging
from typing import Any, List

from semimod.algebra.selfdual import CensusResult
from semimod.algebra.semigroup import NumericalSemigroup
from semimod.helpers.logger import Logger
from semimod.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext


class CensusComparison(BaseLogicUnit):
    """
    Pairs the observed and the expected counts of every semigroup
    """

    def execute(self, input: List[NumericalSemigroup], **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")
        logger: Logger = kwargs.get("logger")

        observed = context.get("observed", {})
        expected = context.get("expected", {})

        results = [
            CensusResult(gamma, observed.get(gamma, {}), expected.get(gamma, {}))
            for gamma in input
        ]

        mismatches = [row for result in results for row in result.mismatches()]
        for row in mismatches:
            logger.log(
                "Census mismatch for <{},{}> at {} generators: "
                "observed {}, expected {}".format(*row),
                logging.WARNING,
            )

        return LogicUnitOutput(
            results,
            not mismatches,
            "Census matches the counting formulas"
            if not mismatches
            else f"Census differs in {len(mismatches)} row(s)",
            {"mismatches": mismatches},
        )
