import json

import pytest

from semimod.config import load_config_from_json
from semimod.constants import DEFAULT_MAX_SUM, DEFAULT_OUTPUT_FORMAT
from semimod.exceptions import InvalidConfigError, InvalidWorkspacePathError
from semimod.helpers.path import find_closest, find_project_root
from semimod.schemas.config import Config


class TestLoadConfig:
    def test_defaults_without_file(self, no_config_file):
        config = load_config_from_json()

        assert config == Config()
        assert config.output_format == DEFAULT_OUTPUT_FORMAT
        assert config.max_sum == DEFAULT_MAX_SUM
        assert not config.oracle_check

    def test_reads_closest_file(self, no_config_file):
        (no_config_file / "semimod.json").write_text(
            json.dumps({"output_format": "json", "max_sum": 12})
        )

        config = load_config_from_json()

        assert config.output_format == "json"
        assert config.max_sum == 12

    def test_overrides_win_except_none(self, no_config_file):
        (no_config_file / "semimod.json").write_text(json.dumps({"verbose": True}))

        assert load_config_from_json({"max_sum": 9}).verbose
        assert load_config_from_json({"verbose": None}).verbose
        assert not load_config_from_json({"verbose": False}).verbose

    def test_config_instance_override(self, no_config_file):
        config = load_config_from_json(Config(resolution_steps=6))
        assert config.resolution_steps == 6

    def test_explicit_path(self, tmp_path):
        path = tmp_path / "other.json"
        path.write_text(json.dumps({"oracle_check": True}))

        assert load_config_from_json(config_path=str(path)).oracle_check

    def test_missing_explicit_path(self, tmp_path):
        with pytest.raises(InvalidConfigError):
            load_config_from_json(config_path=str(tmp_path / "missing.json"))

    def test_invalid_json(self, no_config_file):
        (no_config_file / "semimod.json").write_text("{not json")

        with pytest.raises(InvalidConfigError):
            load_config_from_json()

    @pytest.mark.parametrize(
        "override",
        [
            {"max_sum": 4},
            {"resolution_steps": 0},
            {"svg_cell_size": 0},
            {"output_format": "xml"},
        ],
    )
    def test_invalid_values(self, no_config_file, override):
        with pytest.raises(InvalidConfigError):
            load_config_from_json(override)


class TestFindProjectRoot:
    def test_workspace_env_var(self, no_config_file):
        assert find_project_root() == str(no_config_file)
        assert find_closest("semimod.json") == str(no_config_file / "semimod.json")

    def test_invalid_workspace(self, monkeypatch, tmp_path):
        monkeypatch.setenv("SEMIMOD_WORKSPACE", str(tmp_path / "missing"))

        with pytest.raises(InvalidWorkspacePathError):
            find_project_root()

    def test_walks_up_to_config_file(self, monkeypatch, tmp_path):
        monkeypatch.delenv("SEMIMOD_WORKSPACE", raising=False)
        (tmp_path / "semimod.json").write_text("{}")
        nested = tmp_path / "a" / "b"
        nested.mkdir(parents=True)
        monkeypatch.chdir(nested)

        assert find_project_root() == str(tmp_path.resolve())
