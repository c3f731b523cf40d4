"""Run configuration assembled from defaults, environment, YAML preset and flags."""

import os
from argparse import Namespace
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.clifford import parse_word
from src.preset.yml_handler import PresetHandler
from src.utils.constants import (
    AFFINE_MODULE_WORDS,
    DEFAULT_JOBS,
    DEFAULT_STEP_BUDGET,
    ENV_CACHE,
    ENV_JOBS,
    MAX_SYMFUNC_DEGREE,
    MAX_VERIFY_N,
)
from src.utils.errors import InvalidArgument


def parse_range(text: Any) -> List[int]:
    """
    Parse "a..b", "a" or an integer into an inclusive list of integers.

    Raises:
        InvalidArgument: On malformed text or an empty range.
    """
    if isinstance(text, int):
        return [text]
    if isinstance(text, (list, tuple)):
        return [int(v) for v in text]
    value = str(text).strip()
    try:
        if ".." in value:
            low, high = value.split("..", 1)
            start, stop = int(low), int(high)
        else:
            start = stop = int(value)
    except ValueError:
        raise InvalidArgument(f"expected a range like 2..5, got {text!r}") from None
    if start > stop:
        raise InvalidArgument(f"empty range {text!r}")
    return list(range(start, stop + 1))


def parse_modules(text: Any) -> Tuple[str, ...]:
    """Parse "empty,V,S" or a list into module letter strings."""
    items = text if isinstance(text, (list, tuple)) else str(text).split(",")
    return tuple(parse_word(str(item).strip()) for item in items)


@dataclass
class RunConfig:
    """Everything a subcommand needs, after all layers are merged."""

    command: str = "verify"
    n_values: List[int] = field(default_factory=lambda: [2, 3, 4])
    epsilons: Tuple[int, ...] = (1, -1)
    r_values: List[int] = field(default_factory=lambda: [2])
    max_r: int = 6
    max_degree: int = MAX_SYMFUNC_DEGREE
    budget: int = DEFAULT_STEP_BUDGET
    jobs: int = DEFAULT_JOBS
    cache_dir: Optional[Path] = None
    out: Optional[Path] = None
    slow: bool = False
    affine: bool = False
    modules: Tuple[str, ...] = AFFINE_MODULE_WORDS
    perturb_D: int = 0
    plugins_dir: Optional[Path] = None
    kappa: int = 1
    check_n: List[int] = field(default_factory=list)
    word: str = "SS"
    basis: str = "s"

    def validate(self) -> None:
        """
        Raises:
            InvalidArgument: When a value lies outside the module guards.
        """
        for N in self.n_values:
            if not 0 <= N <= MAX_VERIFY_N:
                raise InvalidArgument(f"N must lie in 0..{MAX_VERIFY_N}, got {N}")
        for epsilon in self.epsilons:
            if epsilon not in (1, -1):
                raise InvalidArgument(f"epsilon must be +1 or -1, got {epsilon}")
        if self.jobs < 1:
            raise InvalidArgument(f"jobs must be >= 1, got {self.jobs}")
        if self.budget < 1:
            raise InvalidArgument(f"step budget must be >= 1, got {self.budget}")
        if self.kappa not in (1, -1):
            raise InvalidArgument(f"kappa must be +1 or -1, got {self.kappa}")
        if not 0 <= self.max_r <= self.max_degree:
            raise InvalidArgument(f"max r must lie in 0..{self.max_degree}, got {self.max_r}")
        if any(r < 0 for r in self.r_values):
            raise InvalidArgument(f"r values must be >= 0, got {self.r_values}")

    def epsilons_for(self, N: int) -> Tuple[int, ...]:
        """Both spin choices matter only for odd N."""
        return self.epsilons if N % 2 else self.epsilons[:1]


_CONVERTERS = {
    "n_values": parse_range,
    "r_values": parse_range,
    "check_n": parse_range,
    "epsilons": lambda v: tuple(parse_range(v)),
    "modules": parse_modules,
    "cache_dir": Path,
    "out": Path,
    "plugins_dir": Path,
    "word": parse_word,
}

# preset keys and flag names that differ from the field names
_ALIASES = {
    "N": "n_values",
    "epsilon": "epsilons",
    "r": "r_values",
    "cache": "cache_dir",
    "plugins": "plugins_dir",
    "check_N": "check_n",
}


def _apply(config: RunConfig, values: Dict[str, Any]) -> None:
    names = {f.name for f in fields(RunConfig)}
    for key, value in values.items():
        name = _ALIASES.get(key, key)
        if name not in names or value is None:
            continue
        convert = _CONVERTERS.get(name)
        setattr(config, name, convert(value) if convert else value)


def _epsilon_values(value: Any) -> Tuple[int, ...]:
    text = str(value).strip()
    if text in ("both", "+-1", "±1"):
        return (1, -1)
    return (int(text),)


def build_run_config(
    command: str, args: Namespace, preset: Optional[PresetHandler] = None
) -> RunConfig:
    """
    Merge built-in defaults, SPINBRAUER_* variables, the preset and the flags.

    Later layers win. Flags left at None do not override anything.

    Raises:
        InvalidArgument: On malformed or out-of-range values.
    """
    config = RunConfig(command=command)
    env: Dict[str, Any] = {}
    if os.environ.get(ENV_CACHE):
        env["cache_dir"] = os.environ[ENV_CACHE]
    if os.environ.get(ENV_JOBS):
        try:
            env["jobs"] = int(os.environ[ENV_JOBS])
        except ValueError:
            raise InvalidArgument(f"{ENV_JOBS} must be an integer") from None
    _apply(config, env)
    if preset is not None:
        settings = preset.for_command(command)
        if "epsilon" in settings:
            settings["epsilon"] = _epsilon_values(settings["epsilon"])
        _apply(config, settings)
    flags = dict(vars(args))
    if flags.get("epsilon") is not None:
        flags["epsilon"] = _epsilon_values(flags["epsilon"])
    _apply(config, flags)
    config.validate()
    return config
