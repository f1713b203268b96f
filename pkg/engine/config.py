"""Runtime bounds, read lazily from the environment.

Entry points load the env file (python-dotenv) before anything reads these.
"""
import logging
import os

logger = logging.getLogger(__name__)

DEFAULT_MAX_CELLS = 20_000
DEFAULT_MAX_CANDIDATES = 1_000_000
DEFAULT_PROBE_BOUND = 64


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %d", name, raw, default)
        return default
    if value <= 0:
        logger.warning("%s=%d must be positive, using %d", name, value, default)
        return default
    return value


def max_cells() -> int:
    return _int_env("BASECHANGE_MAX_CELLS", DEFAULT_MAX_CELLS)


def max_candidates() -> int:
    return _int_env("BASECHANGE_MAX_CANDIDATES", DEFAULT_MAX_CANDIDATES)


def probe_bound() -> int:
    return _int_env("BASECHANGE_PROBE_BOUND", DEFAULT_PROBE_BOUND)
