""" Base class to implement a new text report
Every command renders its `text` output through one of these reports.
"""

import os
import re
from pathlib import Path
from typing import Optional

from jinja2 import Environment, FileSystemLoader, TemplateNotFound

from semimod.exceptions import TemplateFileNotFoundError


class BaseReport:
    """Base class to implement a new text report.

    Inheritors have to override `template` or `template_path`.
    """

    template: Optional[str] = None
    template_path: Optional[str] = None

    def __init__(self, **kwargs):
        """Initialize the report."""
        self.props = kwargs

        if self.template:
            env = Environment(trim_blocks=True, lstrip_blocks=True)
            self.report = env.from_string(self.template)
        elif self.template_path:
            # find path to template file
            current_dir_path = Path(__file__).parent
            path_to_template = os.path.join(current_dir_path, "templates")
            env = Environment(
                loader=FileSystemLoader(path_to_template),
                trim_blocks=True,
                lstrip_blocks=True,
            )
            try:
                self.report = env.get_template(self.template_path)
            except TemplateNotFound as e:
                raise TemplateFileNotFoundError(
                    os.path.join(path_to_template, self.template_path),
                    self.__class__.__name__,
                ) from e
        else:
            raise TemplateFileNotFoundError(None, self.__class__.__name__)

        self._resolved_report = None

    def render(self) -> str:
        """Render the report."""
        render = self.report.render(**self.props)

        # Remove additional newlines in render
        render = re.sub(r"\n{3,}", "\n\n", render)

        return render.rstrip("\n") + "\n"

    def to_string(self) -> str:
        if self._resolved_report is None:
            self._resolved_report = self.render()

        return self._resolved_report

    def __str__(self):
        return self.to_string()
