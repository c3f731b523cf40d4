"""
Tests for relation plugin discovery and the diagram-language plugin.
"""

from pathlib import Path

import pytest

from src.incarnation import IncarnationParams, verify_relations
from src.plugins import PluginRegistry, RelationPlugin

PLUGINS_DIR = Path(__file__).resolve().parents[1] / "plugins"

PLUGIN_SOURCE = '''
from src.diagram import bubble, Diagram
from src.incarnation import RelationInstance
from src.plugins import RelationPlugin


class LoopPlugin(RelationPlugin):
    def relations(self, params):
        return [
            RelationInstance(
                "loop", "vector", (bubble("V"),), (Diagram.identity("").scale(params.N),)
            )
        ]
'''


@pytest.fixture
def plugin_dir(temp_dir):
    """A plugins directory holding one working and one broken plugin."""
    good = temp_dir / "loop"
    good.mkdir()
    (good / "plugin.py").write_text(PLUGIN_SOURCE, encoding="utf-8")
    broken = temp_dir / "broken"
    broken.mkdir()
    (broken / "plugin.py").write_text("raise RuntimeError('boom')\n", encoding="utf-8")
    (temp_dir / "notes").mkdir()
    return temp_dir


class TestPluginRegistry:
    """Test suite for PluginRegistry."""

    def test_discovery(self, plugin_dir):
        """Test that loadable plugins are found and broken ones skipped."""
        registry = PluginRegistry(plugin_dir)
        assert registry.list_plugins() == ["loop"]
        assert registry.has_plugin("loop")
        assert not registry.has_plugin("broken")

    def test_missing_directory(self, temp_dir):
        """Test that a missing directory yields no plugins."""
        assert PluginRegistry(temp_dir / "absent").list_plugins() == []

    def test_get_plugin(self, plugin_dir):
        """Test instantiation by name."""
        registry = PluginRegistry(plugin_dir)
        plugin = registry.get_plugin("loop")
        assert isinstance(plugin, RelationPlugin)
        assert plugin.plugin_dir == plugin_dir / "loop"
        assert registry.get_plugin("nope") is None

    def test_collect_relations(self, plugin_dir, params3):
        """Test that collected instances check out in the relation suite."""
        instances = PluginRegistry(plugin_dir).collect_relations(params3)
        assert [inst.instance_id for inst in instances] == ["loop:vector"]
        report = verify_relations(params3, extra=instances)
        assert report.passed

    def test_failing_plugin_is_skipped(self, plugin_dir, params3, mocker):
        """Test that a plugin raising during collection does not stop the others."""
        registry = PluginRegistry(plugin_dir)
        plugin = registry.get_plugin("loop")
        mocker.patch.object(plugin, "relations", side_effect=ValueError("bad"))
        mocker.patch.object(registry, "get_plugin", return_value=plugin)
        assert registry.collect_relations(params3) == []


class TestDslRelationsPlugin:
    """Test suite for the bundled diagram-language plugin."""

    @pytest.mark.parametrize("N, epsilon", [(2, 1), (3, 1), (3, -1), (4, 1)])
    def test_bundled_relations_hold(self, N, epsilon):
        """Test every configured pair at small N."""
        params = IncarnationParams(N, epsilon)
        instances = PluginRegistry(PLUGINS_DIR).collect_relations(params)
        assert {inst.relation for inst in instances} >= {"dsl-snake", "dsl-zombie"}
        report = verify_relations(params, extra=instances)
        assert report.passed, [e.to_dict() for e in report.failures]

    def test_missing_config(self, temp_dir, params2):
        """Test that a copy without config.yml contributes nothing."""
        target = temp_dir / "dsl_relations"
        target.mkdir()
        source = PLUGINS_DIR / "dsl_relations" / "plugin.py"
        (target / "plugin.py").write_text(source.read_text(encoding="utf-8"), encoding="utf-8")
        assert PluginRegistry(temp_dir).collect_relations(params2) == []
