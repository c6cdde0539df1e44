from typing import Any, List, Optional, Union

from semimod.algebra.semigroup import NumericalSemigroup
from semimod.schemas.config import Config


class PipelineContext:
    """
    Pass Context to the pipeline which is accessible to each step via kwargs
    """

    def __init__(
        self,
        semigroups: Optional[List[NumericalSemigroup]] = None,
        config: Optional[Union[Config, dict]] = None,
        initial_values: dict = None,
    ) -> None:
        if config is None:
            config = Config()
        elif isinstance(config, dict):
            config = Config(**config)

        self.semigroups = semigroups or []
        self.config = config
        self.intermediate_values = dict(initial_values or {})
        self._initial_values = initial_values

    def reset_intermediate_values(self):
        self.intermediate_values = dict(self._initial_values or {})

    def add(self, key: str, value: Any):
        self.intermediate_values[key] = value

    def add_many(self, values: dict):
        self.intermediate_values.update(values)

    def get(self, key: str, default: Any = ""):
        return self.intermediate_values.get(key, default)
