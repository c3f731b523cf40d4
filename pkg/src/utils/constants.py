"""
Application-wide constants.
"""

from pathlib import Path

# Desk-scale guards
MAX_WORD_DIMENSION = 256
DIRECT_COMMUTANT_MAX_DIMENSION = 64
MAX_SYMFUNC_DEGREE = 16
JACOBI_TRUDI_MAX_DEGREE = 8
MAX_VERIFY_N = 7

# Evaluator
DEFAULT_STEP_BUDGET = 200_000

# Relation suites
DELIGNE_MAX_LEGS = 4
EXTRA_SLOW_N = 5
AFFINE_MODULE_WORDS = ("", "V", "S")

# Worker pool
DEFAULT_JOBS = 1

# File paths
DEFAULT_RUN_PRESET = Path("config/run.yml")
DEFAULT_LOG_FILE = Path("logs/spinbrauer.log")
DIAGRAM_FILE_SUFFIX = ".sbd"

# Environment variables
ENV_CONFIG = "SPINBRAUER_CONFIG"
ENV_CACHE = "SPINBRAUER_CACHE"
ENV_JOBS = "SPINBRAUER_JOBS"

# CLI exit codes
EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
