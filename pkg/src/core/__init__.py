"""Core application package for spinbrauer.

This package holds the CLI entry wiring, the subcommand controller, the on-disk
matrix cache and the worker pool that runs relation suites.
"""

from src.core.cache import ResultCache
from src.core.runner import SuiteRunner

__all__ = ["ResultCache", "SuiteRunner"]
