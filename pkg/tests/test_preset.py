"""
Tests for the run preset and the layered run configuration.
"""

from argparse import Namespace
from pathlib import Path

import pytest
import yaml

from src.preset import PresetHandler, RunConfig, build_run_config, parse_modules, parse_range
from src.utils.errors import InvalidArgument


def _flags(**values):
    base = {"N": None, "epsilon": None, "jobs": None, "cache": None, "out": None, "config": None}
    base.update(values)
    return Namespace(**base)


class TestParsing:
    """Test suite for range and module parsing."""

    def test_ranges(self):
        """Test "a..b", single values, integers and lists."""
        assert parse_range("2..5") == [2, 3, 4, 5]
        assert parse_range(" 3 ") == [3]
        assert parse_range(4) == [4]
        assert parse_range([1, 3]) == [1, 3]

    def test_bad_ranges(self):
        """Test malformed and empty ranges."""
        with pytest.raises(InvalidArgument):
            parse_range("two..five")
        with pytest.raises(InvalidArgument):
            parse_range("5..2")

    def test_modules(self):
        """Test the empty word and comma lists."""
        assert parse_modules("empty,V,S") == ("", "V", "S")
        assert parse_modules(["SV", "empty"]) == ("SV", "")
        with pytest.raises(InvalidArgument):
            parse_modules("V,W")


class TestPresetHandler:
    """Test suite for PresetHandler."""

    def test_init_with_existing_file(self, run_preset):
        """Test reading a preset from disk."""
        handler = PresetHandler(run_preset)
        assert handler.path == run_preset
        assert handler.get("epsilon") == "both"
        assert handler.get("missing", "default") == "default"

    def test_init_with_nonexistent_file(self, temp_dir):
        """Test that a missing preset is empty."""
        handler = PresetHandler(temp_dir / "nonexistent.yml")
        assert handler.state == {}
        assert handler.for_command("verify") == {}

    def test_non_mapping_is_rejected(self, temp_dir):
        """Test that a list at the top level is an error."""
        path = temp_dir / "list.yml"
        path.write_text(yaml.safe_dump([1, 2]), encoding="utf-8")
        with pytest.raises(InvalidArgument):
            PresetHandler(path)

    def test_command_section_wins(self, temp_dir):
        """Test that a command section overrides top-level keys of the same name."""
        path = temp_dir / "run.yml"
        path.write_text(yaml.safe_dump({"jobs": 2, "N": "2", "verify": {"N": "3..4"}}), encoding="utf-8")
        handler = PresetHandler(path)
        assert handler.for_command("verify") == {"jobs": 2, "N": "3..4"}
        assert handler.for_command("eval") == {"jobs": 2, "N": "2"}

    def test_section_must_be_a_mapping(self, temp_dir):
        """Test that a scalar command section is rejected."""
        path = temp_dir / "run.yml"
        path.write_text("verify: 3\n", encoding="utf-8")
        with pytest.raises(InvalidArgument):
            PresetHandler(path).for_command("verify")


class TestRunConfig:
    """Test suite for build_run_config."""

    def test_defaults(self):
        """Test the built-in values without preset or flags."""
        config = build_run_config("verify", _flags())
        assert config.n_values == [2, 3, 4]
        assert config.epsilons == (1, -1)
        assert config.jobs == 1
        assert config.cache_dir is None

    def test_preset_layer(self, run_preset):
        """Test that the preset section applies to its command only."""
        preset = PresetHandler(run_preset)
        verify = build_run_config("verify", _flags(), preset)
        assert verify.n_values == [2, 3]
        assert verify.modules == ("", "V")
        analyze = build_run_config("analyze", _flags(), preset)
        assert analyze.n_values == [3]
        assert analyze.r_values == [2]

    def test_flags_override_preset(self, run_preset):
        """Test that flags win over the preset and None flags are ignored."""
        preset = PresetHandler(run_preset)
        config = build_run_config("verify", _flags(N="4", epsilon="-1", slow=None), preset)
        assert config.n_values == [4]
        assert config.epsilons == (-1,)
        assert config.slow is False

    def test_environment_layer(self, monkeypatch, run_preset):
        """Test SPINBRAUER_JOBS and SPINBRAUER_CACHE under the preset and flags."""
        monkeypatch.setenv("SPINBRAUER_JOBS", "3")
        monkeypatch.setenv("SPINBRAUER_CACHE", "/tmp/spinbrauer-cache")
        config = build_run_config("verify", _flags(), PresetHandler(run_preset))
        assert config.jobs == 3
        assert config.cache_dir == Path("/tmp/spinbrauer-cache")
        assert build_run_config("verify", _flags(jobs=1)).jobs == 1

    def test_bad_environment(self, monkeypatch):
        """Test that a non-integer job count is an input error."""
        monkeypatch.setenv("SPINBRAUER_JOBS", "many")
        with pytest.raises(InvalidArgument):
            build_run_config("verify", _flags())

    @pytest.mark.parametrize(
        "flags",
        [{"N": "0..9"}, {"epsilon": "2"}, {"jobs": 0}, {"budget": 0}, {"kappa": 3}, {"max_r": 40}],
    )
    def test_validation(self, flags):
        """Test the range guards."""
        with pytest.raises(InvalidArgument):
            build_run_config("verify", _flags(**flags))

    def test_epsilons_for(self):
        """Test that even N only uses the first epsilon."""
        config = RunConfig()
        assert config.epsilons_for(3) == (1, -1)
        assert config.epsilons_for(4) == (1,)
