from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from src.utils.errors import InvalidArgument


class PresetHandler:
    """
    Read-only YAML run preset.

    The file holds a mapping; sub-mappings under the command names (``verify``,
    ``eval``, ``analyze``, ``symfunc``) override the top-level keys for that command.
    """

    def __init__(self, path: Path) -> None:
        """
        Load the preset at path; a missing file is an empty preset.

        Args:
            path: Path to the YAML file.

        Raises:
            InvalidArgument: When the file does not hold a mapping.
        """
        self.path: Path = path
        self.state: Dict[str, Any] = self._load()

    def _load(self) -> Dict[str, Any]:
        if not self.path.exists():
            return {}
        with self.path.open("r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise InvalidArgument(f"run preset {self.path} must be a mapping")
        return data

    def get(self, key: str, default: Optional[Any] = None) -> Any:
        return self.state.get(key, default)

    def for_command(self, command: str) -> Dict[str, Any]:
        """
        Top-level keys merged with the command's own section.

        Args:
            command: Subcommand name.

        Returns:
            Dict[str, Any]: Settings for that command, section values winning.
        """
        merged = {k: v for k, v in self.state.items() if not isinstance(v, dict)}
        section = self.state.get(command) or {}
        if not isinstance(section, dict):
            raise InvalidArgument(f"section {command!r} of {self.path} must be a mapping")
        merged.update(section)
        return merged
