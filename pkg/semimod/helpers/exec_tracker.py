import time
from typing import Any, List

from semimod.__version__ import __version__


class ExecTracker:
    """
    Records the steps of a pipeline run with their timings, the way a
    census run is summarized at the end of `census --all --verbose`.
    """

    _run_info: dict
    _steps: List
    _success: bool

    def __init__(self) -> None:
        self._success = False
        self._start_time = None
        self._run_info = {}
        self._steps = []
        self._response = None

    def start_new_track(self, name: str, **info) -> None:
        """
        Resets tracking variables to start new track
        """
        self._start_time = time.time()
        self._steps = []
        self._response = None
        self._success = False
        self._run_info = {"run": name, "semimod_version": __version__, **info}

    def add_step(self, step: dict) -> None:
        """
        Add Custom Step that is performed for additional information
        Args:
            step (dict): dictionary containing information
        """
        self._steps.append(step)

    def set_final_response(self, response: Any):
        self._response = response

    def get_summary(self) -> dict:
        """
        Returns the summary in json to summarize the run

        Returns:
            dict: summary json
        """
        if self._start_time is None:
            raise RuntimeError("[ExecTracker]: Tracking not started")

        return {
            "run_info": self._run_info,
            "steps": self._steps,
            "response": self._response,
            "execution_time": self.get_execution_time(),
            "success": self._success,
        }

    def get_execution_time(self) -> float:
        return time.time() - self._start_time

    @property
    def steps(self) -> List[dict]:
        return self._steps

    @property
    def success(self) -> bool:
        return self._success

    @success.setter
    def success(self, value: bool):
        self._success = value
