"""Application settings and constants."""
import os
from pathlib import Path
from typing import Dict

from dotenv import load_dotenv

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
CONFIG_DIR = PROJECT_ROOT / 'config'

# Tolerances
SIMPLEX_TOLERANCE = 1e-12
SIMPLEX_RENORMALIZE_FLOOR = 1e-15
IDENTITY_TOLERANCE = 1e-9
FAMILY_TOLERANCE = 1e-12
RATIONAL_MAX_DENOMINATOR = 10**12

# Size guards
DEFAULT_ENUMERATION_LIMIT = 10**6
DEFAULT_LP_GUARD = 4096
W2_ORACLE_MAX_SUPPORT = 64
TREE_COUPLING_MAX_SUPPORT = 16
ASSIGNMENT_MAX_N = 8
VERIFY_MAX_NODES = 6
VERIFY_ETA_MAX_ATOMS = 6
TREE_CLAIM_MAX_NODES = 5
TREE_CLAIM_MAX_SUPPORT = 3

# Uniqueness probes
PROBE_RETRY_BUDGET = 32
PROBE_RCOND_THRESHOLD = 1e-10

# Instance generation
GEN_CONNECT_RETRIES = 100

# Output
MACHINE_DIGITS = 17
TABLE_DIGITS = 6
OUTPUT_FORMATS = ("table", "csv", "json-lines")

# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

# Optional environment overrides
OPTIONAL_ENV_VARS: Dict[str, str] = {
    "DISTTV_THREADS": "Parallelism cap for schedule-independent loops",
    "DISTTV_LOG_LEVEL": "Logging level name",
    "DISTTV_LOG_FILE": "Additional log file path",
}


def load_env_vars() -> None:
    """Load config/.env if present; every variable is optional."""
    env_path = CONFIG_DIR / '.env'
    if env_path.exists():
        load_dotenv(env_path)


def get_thread_count() -> int:
    """Read DISTTV_THREADS, falling back to a single worker."""
    raw = os.getenv("DISTTV_THREADS", "1").strip()
    try:
        threads = int(raw)
    except ValueError as e:
        raise ValueError(f"DISTTV_THREADS must be an integer, got {raw!r}") from e
    return max(1, threads)


def get_log_level() -> str:
    return os.getenv("DISTTV_LOG_LEVEL", "INFO").upper()


def get_log_file() -> str:
    return os.getenv("DISTTV_LOG_FILE", "")
