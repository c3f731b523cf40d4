from .run_config import RunConfig, build_run_config, parse_modules, parse_range
from .yml_handler import PresetHandler

__all__ = ["PresetHandler", "RunConfig", "build_run_config", "parse_modules", "parse_range"]
