"""Configuration module for the characteristic polynomial toolkit."""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent / ".env"
load_dotenv(dotenv_path=env_path)


def _int_setting(name: str, default: int, minimum: int = 1) -> int:
    """Read a positive integer setting, failing fast on garbage."""
    raw = os.getenv(name, str(default))
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


# Logging
LOG_LEVEL = os.getenv("DRINFELD_LOG_LEVEL", "INFO").upper()
if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
    raise ValueError(f"DRINFELD_LOG_LEVEL has unknown level {LOG_LEVEL!r}")

# Algorithms
ALGORITHMS = ("auto", "recurrence", "euclidean", "bsgs")
DEFAULT_ALGORITHM = os.getenv("DRINFELD_DEFAULT_ALGORITHM", "auto")
if DEFAULT_ALGORITHM not in ALGORITHMS:
    raise ValueError(
        f"DRINFELD_DEFAULT_ALGORITHM must be one of {', '.join(ALGORITHMS)}, got {DEFAULT_ALGORITHM!r}"
    )

# Arithmetic kernels
KRONECKER_THRESHOLD = _int_setting("DRINFELD_KRONECKER_THRESHOLD", 16)
MAX_TABLE_FIELD = _int_setting("DRINFELD_MAX_TABLE_FIELD", 1024, minimum=4)

# Verification
ORACLE_MAX_UNKNOWNS = _int_setting("DRINFELD_ORACLE_MAX_UNKNOWNS", 400)

# Benchmarks
BENCH_REPEATS = _int_setting("DRINFELD_BENCH_REPEATS", 1)
BENCH_CSV_HEADER = ("n", "r", "algorithm", "wall_seconds", "frobenius_ops", "l_muls")

# Instance files
INSTANCE_VERSION = 1
FROBENIUS_TOKEN = "frobenius"
