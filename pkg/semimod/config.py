import json
from typing import Optional, Union

from .constants import CONFIG_FILENAME
from .exceptions import InvalidConfigError
from .helpers.path import find_closest
from .pydantic import ValidationError
from .schemas.config import Config


def load_config_from_json(
    override_config: Optional[Union[Config, dict]] = None,
    config_path: Optional[str] = None,
) -> Config:
    """
    Load the configuration from the semimod.json file.

    Args:
        override_config (Optional[Union[Config, dict]], optional): The configuration to
        override the one in the file. Defaults to None.
        config_path (Optional[str], optional): Explicit path of the config file.
        Defaults to the closest semimod.json of the project.

    Returns:
        Config: The validated configuration.

    Raises:
        InvalidConfigError: when the file or the overrides hold invalid values.
    """

    config = {}

    if override_config is None:
        override_config = {}

    if isinstance(override_config, Config):
        override_config = override_config.dict()

    try:
        with open(config_path or find_closest(CONFIG_FILENAME), "r") as f:
            config = json.load(f)
    except FileNotFoundError:
        # Ignore the error if the file does not exist, will use the default config
        if config_path is not None:
            raise InvalidConfigError(f"Config file '{config_path}' does not exist")
    except json.JSONDecodeError as e:
        raise InvalidConfigError(f"Config file is not valid JSON: {e}") from e

    if override_config:
        config.update(
            {key: value for key, value in override_config.items() if value is not None}
        )

    try:
        return Config(**config)
    except ValidationError as e:
        raise InvalidConfigError(str(e)) from e
