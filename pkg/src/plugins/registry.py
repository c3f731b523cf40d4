"""Discovery of relation plugins under a directory."""

import importlib.util
import inspect
import logging
from pathlib import Path
from types import ModuleType
from typing import Dict, Iterator, List, Optional, Type

from src.incarnation import IncarnationParams, RelationInstance
from src.plugins.base import RelationPlugin

PLUGIN_FILE = "plugin.py"
CLASS_SUFFIX = "Plugin"


def _plugin_files(root: Path) -> Iterator[Path]:
    for child in sorted(root.iterdir()):
        candidate = child / PLUGIN_FILE
        if child.is_dir() and candidate.exists():
            yield candidate


def _import_file(path: Path, name: str) -> ModuleType:
    spec = importlib.util.spec_from_file_location(f"spinbrauer_plugins.{name}", path)
    if spec is None or spec.loader is None:
        raise ImportError(f"cannot build an import spec for {path}")
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def _relation_plugin_class(module: ModuleType) -> Optional[Type[RelationPlugin]]:
    for attr_name, attr in inspect.getmembers(module, inspect.isclass):
        if attr is RelationPlugin or not attr_name.endswith(CLASS_SUFFIX):
            continue
        if issubclass(attr, RelationPlugin) and not inspect.isabstract(attr):
            return attr
    return None


class PluginRegistry:
    """
    Relation plugins found in one directory, keyed by their subdirectory name.

    Each subdirectory with a plugin.py holding a concrete RelationPlugin subclass whose
    name ends in "Plugin" counts as a plugin. Anything that fails to import is logged.
    """

    def __init__(self, plugins_dir: Path) -> None:
        """
        Args:
            plugins_dir: Directory holding one subdirectory per plugin.
        """
        self.logger: logging.Logger = logging.getLogger(self.__class__.__name__)
        self.plugins_dir: Path = Path(plugins_dir)
        self._classes: Dict[str, Type[RelationPlugin]] = {}
        self._discover()

    def _discover(self) -> None:
        if not self.plugins_dir.is_dir():
            self.logger.warning(f"No plugin directory at {self.plugins_dir}")
            return
        for path in _plugin_files(self.plugins_dir):
            name = path.parent.name
            try:
                found = _relation_plugin_class(_import_file(path, name))
            except Exception as e:
                self.logger.error(f"Could not import plugin {name} from {path}: {e}", exc_info=True)
                continue
            if found is None:
                self.logger.error(f"{path} defines no RelationPlugin subclass named *{CLASS_SUFFIX}")
                continue
            self._classes[name] = found
            self.logger.info(f"Found relation plugin {name} ({found.__name__})")

    def list_plugins(self) -> List[str]:
        return sorted(self._classes)

    def has_plugin(self, plugin_name: str) -> bool:
        return plugin_name in self._classes

    def get_plugin(self, plugin_name: str) -> Optional[RelationPlugin]:
        """
        Instantiate a discovered plugin.

        Returns:
            Optional[RelationPlugin]: None when the name is unknown or construction fails.
        """
        cls = self._classes.get(plugin_name)
        if cls is None:
            self.logger.error(f"Unknown relation plugin {plugin_name!r}")
            return None
        try:
            return cls(self.plugins_dir / plugin_name)
        except Exception as e:
            self.logger.error(f"Plugin {plugin_name} failed to start: {e}", exc_info=True)
            return None

    def collect_relations(self, params: IncarnationParams) -> List[RelationInstance]:
        """
        Instances from every plugin, in plugin name order.

        A plugin that raises for these parameters is logged and skipped.
        """
        instances: List[RelationInstance] = []
        for name in self.list_plugins():
            plugin = self.get_plugin(name)
            if plugin is None:
                continue
            try:
                found = list(plugin.relations(params))
            except Exception as e:
                self.logger.error(f"Plugin {name} failed at {params.label()}: {e}", exc_info=True)
                continue
            self.logger.debug(f"{name} contributed {len(found)} instances at {params.label()}")
            instances.extend(found)
        return instances
