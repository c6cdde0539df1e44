from typing import Optional

from semimod.algebra.selfdual import CensusReport
from semimod.helpers.exec_tracker import ExecTracker
from semimod.pipelines.census.census_pipeline_input import CensusPipelineInput

from ...helpers.logger import Logger
from ..pipeline import Pipeline
from ..pipeline_context import PipelineContext
from .census_comparison import CensusComparison
from .census_table import CensusTable
from .expected_counts import ExpectedCounts
from .selfdual_enumeration import SelfdualEnumeration
from .validate_census_input import ValidateCensusInput


class CensusPipeline:
    """
    Brute-force selfdual census of several semigroups, compared against the
    closed counting formulas.
    """

    pipeline: Pipeline
    context: PipelineContext
    _logger: Logger

    def __init__(
        self,
        context: Optional[PipelineContext] = None,
        logger: Optional[Logger] = None,
    ):
        self.context = context or PipelineContext()
        self.exec_tracker = ExecTracker()

        self.pipeline = Pipeline(
            context=self.context,
            logger=logger,
            exec_tracker=self.exec_tracker,
            steps=[
                ValidateCensusInput(),
                SelfdualEnumeration(),
                ExpectedCounts(),
                CensusComparison(),
                CensusTable(),
            ],
        )
        self._logger = self.pipeline.logger

    def run(self, input: CensusPipelineInput) -> CensusReport:
        """
        Executes the census for every semigroup of the input
        Args:
            input (CensusPipelineInput): semigroups to count

        Returns:
            CensusReport: one CensusResult per semigroup, ordered by (alpha, beta)
        """
        self._logger.log(f"Executing Pipeline: {self.__class__.__name__}")

        self.context.reset_intermediate_values()
        self.exec_tracker.start_new_track(
            "census", semigroups=[str(gamma) for gamma in input.semigroups]
        )

        report = self.pipeline.run(input)

        self.exec_tracker.success = report.matches
        summary = self.exec_tracker.get_summary()
        for step in summary["steps"]:
            self._logger.log(f"{step['type']} took {step['execution_time']:.3f}s")
        self._logger.log(f"Census finished in {summary['execution_time']:.3f}s")
        return report
