"""Relation plugin reading diagram-language pairs from its config.yml."""

import logging
from pathlib import Path
from typing import Any, Dict, List

import yaml

from src.diagram import parse_dsl
from src.incarnation import IncarnationParams, RelationInstance
from src.plugins.base import RelationPlugin


class DslRelationsPlugin(RelationPlugin):
    """Turns each configured lhs/rhs pair into a relation instance."""

    def __init__(self, plugin_dir: Path) -> None:
        super().__init__(plugin_dir)
        self.logger: logging.Logger = logging.getLogger(self.__class__.__name__)
        self.config: Dict[str, Any] = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        config_file = self.plugin_dir / "config.yml"
        if not config_file.exists():
            self.logger.info(f"Config file not found at {config_file}. No relations.")
            return {}
        with config_file.open("r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}

    def relations(self, params: IncarnationParams) -> List[RelationInstance]:
        out = []
        for item in self.config.get("relations", []):
            lhs = parse_dsl(item["lhs"])
            rhs = parse_dsl(item["rhs"])
            side = item.get("kappa")
            if side == "lhs":
                lhs = lhs.scale(params.kappa)
            elif side == "rhs":
                rhs = rhs.scale(params.kappa)
            out.append(RelationInstance(f"dsl-{item['relation']}", item["instance"], (lhs,), (rhs,)))
        return out
