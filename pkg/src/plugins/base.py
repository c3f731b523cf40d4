"""Abstract base class for relation plugins."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import List

from src.incarnation import IncarnationParams, RelationInstance


class RelationPlugin(ABC):
    """Abstract base class for relation plugins.

    A plugin contributes extra relation instances to the verification suite. Plugins
    are self-contained and load their own configuration from their directory.
    """

    def __init__(self, plugin_dir: Path) -> None:
        """Initialize the plugin with its own directory.

        Args:
            plugin_dir: Directory holding plugin.py and an optional config.yml.
        """
        self.plugin_dir: Path = plugin_dir

    @abstractmethod
    def relations(self, params: IncarnationParams) -> List[RelationInstance]:
        """Relation instances to check at the given parameters.

        Args:
            params: N, epsilon and the D specialization of the current run.

        Returns:
            List[RelationInstance]: Instances whose two sides should incarnate to the
                same matrix. Plugins may return an empty list for parameters they do
                not cover.
        """
        pass
