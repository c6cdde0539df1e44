"""
Logger class

This class is used to log messages to stderr and/or a file. Stdout is left
to command payloads.

Example:
    ```python
    from semimod.helpers.logger import Logger

    logger = Logger(save_logs=False, verbose=True)
    logger.log("Enumerating classes of <5,7>")
    # 2026-08-01 12:00:00 [INFO] Enumerating classes of <5,7>

    logger.logs
    #[{"msg": "Enumerating classes of <5,7>", "level": "INFO", ...}]
    ```
"""

import inspect
import logging
import sys
import time
from typing import List

from semimod.constants import LOG_FILENAME
from semimod.pydantic import BaseModel

from .path import find_closest


class Log(BaseModel):
    """Log class"""

    msg: str
    level: str
    time: float
    source: str = None


class Logger:
    """Logger class"""

    _logs: List[Log]
    _logger: logging.Logger
    _verbose: bool
    _last_time: float

    def __init__(self, save_logs: bool = False, verbose: bool = False):
        """Initialize the logger"""
        self._logs = []
        self._verbose = verbose
        self._last_time = time.time()
        self._logger = logging.getLogger(__name__)
        self._logger.setLevel(logging.INFO)
        self._logger.propagate = False
        self._logger.handlers = []

        if save_logs:
            self._add_handler(logging.FileHandler(self._log_filename()))
        if verbose:
            self._add_handler(logging.StreamHandler(sys.stderr))

    def _add_handler(self, handler: logging.Handler):
        handler.setFormatter(
            logging.Formatter(
                "%(asctime)s [%(levelname)s] %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )
        self._logger.addHandler(handler)

    def _remove_handlers(self, kind: type):
        for handler in list(self._logger.handlers):
            if type(handler) is kind:
                self._logger.removeHandler(handler)
                handler.close()

    @staticmethod
    def _log_filename() -> str:
        try:
            return find_closest(LOG_FILENAME)
        except ValueError:
            return LOG_FILENAME

    def log(self, message: str, level: int = logging.INFO):
        """Log a message"""
        self._logger.log(level, message)

        self._logs.append(
            Log(
                msg=message,
                level=logging.getLevelName(level),
                time=self._calculate_time_diff(),
                source=self._invoked_from(),
            )
        )

    def _invoked_from(self, level: int = 5) -> str:
        """Return the name of the class that invoked the logger"""
        calling_class = None
        for frame_info in inspect.stack()[1:]:
            frame_locals = frame_info[0].f_locals
            calling_instance = frame_locals.get("self")
            if calling_instance and calling_instance.__class__ != self.__class__:
                calling_class = calling_instance.__class__.__name__
                break
            level -= 1
            if level <= 0:
                break
        return calling_class

    def _calculate_time_diff(self):
        """Calculate the time difference since the last log"""
        time_diff = time.time() - self._last_time
        self._last_time = time.time()
        return time_diff

    @property
    def logs(self) -> List[Log]:
        """Return the logs"""
        return self._logs

    @property
    def verbose(self) -> bool:
        """Return the verbose flag"""
        return self._verbose

    @verbose.setter
    def verbose(self, verbose: bool):
        """Set the verbose flag"""
        self._verbose = verbose
        self._remove_handlers(logging.StreamHandler)
        if verbose:
            self._add_handler(logging.StreamHandler(sys.stderr))

    @property
    def save_logs(self) -> bool:
        """Return the save_logs flag"""
        return any(
            isinstance(handler, logging.FileHandler)
            for handler in self._logger.handlers
        )

    @save_logs.setter
    def save_logs(self, save_logs: bool):
        """Set the save_logs flag"""
        if save_logs and not self.save_logs:
            self._add_handler(logging.FileHandler(self._log_filename()))
        elif not save_logs:
            self._remove_handlers(logging.FileHandler)
