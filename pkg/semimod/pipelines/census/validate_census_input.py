from typing import Any

from semimod.algebra.semigroup import NumericalSemigroup
from semimod.exceptions import InvalidConfigError
from semimod.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext
from .census_pipeline_input import CensusPipelineInput


class ValidateCensusInput(BaseLogicUnit):
    """
    Validates census input and stores the ordered semigroups in the context
    """

    def execute(self, input: CensusPipelineInput, **kwargs) -> Any:
        """
        This method checks that the census has something to count and that
        every entry is a semigroup.

        :param input: Your input data.
        :param kwargs: A dictionary of keyword arguments.
            - 'logger' (any): The logger for logging.
            - 'config' (Config): Global configurations for the test
            - 'context' (any): The execution context.

        :return: The result of the execution.
        """
        context: PipelineContext = kwargs.get("context")

        if not input.semigroups:
            raise InvalidConfigError("Census needs at least one semigroup")

        for gamma in input.semigroups:
            if not isinstance(gamma, NumericalSemigroup):
                raise InvalidConfigError(
                    f"Census entries must be NumericalSemigroup, got {gamma!r}"
                )

        # unique, ordered by (alpha, beta)
        semigroups = sorted(
            set(input.semigroups), key=lambda gamma: (gamma.alpha, gamma.beta)
        )
        context.semigroups = semigroups

        return LogicUnitOutput(
            semigroups,
            True,
            "Input Validation Successful",
            {"semigroups": [str(gamma) for gamma in semigroups]},
        )
