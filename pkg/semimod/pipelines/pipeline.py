import logging
import time
from typing import Any, List, Optional, Sequence, Union

from semimod.config import load_config_from_json
from semimod.exceptions import PipelineConcatenationError, UnSupportedLogicUnit
from semimod.helpers.exec_tracker import ExecTracker
from semimod.helpers.logger import Logger
from semimod.pipelines.base_logic_unit import BaseLogicUnit
from semimod.pipelines.logic_unit_output import LogicUnitOutput
from semimod.pipelines.pipeline_context import PipelineContext

from ..algebra.semigroup import NumericalSemigroup
from ..schemas.config import Config
from .abstract_pipeline import AbstractPipeline


class Pipeline(AbstractPipeline):
    """
    Runs a sequence of logic units over the semigroups of a PipelineContext.

    The output of each step is the input of the next one. Steps returning a
    LogicUnitOutput are recorded in the ExecTracker and unwrapped before
    being handed on.
    """

    _context: PipelineContext
    _logger: Logger
    _steps: List[BaseLogicUnit]
    _exec_tracker: ExecTracker

    def __init__(
        self,
        context: Union[Sequence[NumericalSemigroup], PipelineContext, None] = None,
        config: Optional[Union[Config, dict]] = None,
        exec_tracker: Optional[ExecTracker] = None,
        steps: Optional[List[BaseLogicUnit]] = None,
        logger: Optional[Logger] = None,
    ):
        """
        Args:
            context: shared context, or the semigroups to build one from
                together with `config` (merged over semimod.json).
            config: only used when `context` is not a PipelineContext.
            exec_tracker: tracker to record the steps in, a fresh one by default.
            steps: initial logic units, validated like `add_step`.
            logger: defaults to a Logger configured from the context.
        """
        if not isinstance(context, PipelineContext):
            context = PipelineContext(
                list(context or []), load_config_from_json(config)
            )

        self._context = context
        self._logger = logger if logger is not None else Logger(
            save_logs=context.config.save_logs, verbose=context.config.verbose
        )
        self._exec_tracker = exec_tracker or ExecTracker()
        self._steps = []
        for step in steps or []:
            self.add_step(step)

    def add_step(self, logic: BaseLogicUnit):
        if not isinstance(logic, BaseLogicUnit):
            raise UnSupportedLogicUnit(
                f"{type(logic).__name__} is not a BaseLogicUnit, "
                "pipeline steps must implement execute"
            )
        self._steps.append(logic)

    def _track(self, logic: BaseLogicUnit, output: LogicUnitOutput, elapsed: float):
        self._exec_tracker.add_step(
            {
                "type": logic.__class__.__name__,
                "success": output.success,
                "message": output.message,
                "execution_time": elapsed,
                "data": output.metadata,
            }
        )
        if output.final_track_output:
            self._exec_tracker.set_final_response(output.metadata)

    def run(self, data: Any = None) -> Any:
        """
        Feed `data` through every step that is not skipped and return what
        the last one produced. Exceptions are logged and re-raised.
        """
        index = 0
        try:
            for index, logic in enumerate(self._steps):
                if logic.before_execution is not None:
                    logic.before_execution(data)

                name = logic.__class__.__name__
                if logic.skip_if is not None and logic.skip_if(self._context):
                    self._logger.log(f"Step {index} ({name}) skipped")
                    continue
                self._logger.log(f"Executing Step {index}: {name}")

                start_time = time.time()
                output = logic.execute(
                    data,
                    logger=self._logger,
                    config=self._context.config,
                    context=self._context,
                )

                if isinstance(output, LogicUnitOutput):
                    self._track(logic, output, time.time() - start_time)
                    data = output.output
                else:
                    data = output

                if logic.on_execution is not None:
                    logic.on_execution(data)

        except Exception as e:
            self._logger.log(f"Pipeline failed on step {index}: {e}", logging.ERROR)
            raise

        return data

    def __or__(self, pipeline: "Pipeline") -> "Pipeline":
        """Pipeline running the steps of `self` and then those of `pipeline`."""
        if not isinstance(pipeline, Pipeline):
            raise PipelineConcatenationError(
                "Pipeline can be concatenated with Pipeline class only!"
            )

        return Pipeline(
            context=self._context,
            logger=self._logger,
            exec_tracker=self._exec_tracker,
            steps=self._steps + pipeline._steps,
        )

    @property
    def context(self) -> PipelineContext:
        return self._context

    @context.setter
    def context(self, context: PipelineContext):
        self._context = context

    @property
    def logger(self) -> Logger:
        return self._logger

    @logger.setter
    def logger(self, logger: Logger):
        self._logger = logger

    @property
    def exec_tracker(self) -> ExecTracker:
        return self._exec_tracker

    @exec_tracker.setter
    def exec_tracker(self, exec_tracker: ExecTracker):
        self._exec_tracker = exec_tracker
