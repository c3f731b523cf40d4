"""Plugin system for extra relation instances."""

from src.plugins.base import RelationPlugin
from src.plugins.registry import PluginRegistry

__all__ = ["PluginRegistry", "RelationPlugin"]
