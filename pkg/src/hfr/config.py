"""
Runtime settings read from the environment.

Values are looked up at call time so tests (and long-running callers) can
change them without re-importing the package.
"""

import logging
import os

logger = logging.getLogger(__name__)

ENV_MAX_BOUND_CAP = "HFR_MAX_BOUND_CAP"
ENV_ACTION_DEPTH = "HFR_ACTION_DEPTH"

DEFAULT_MAX_BOUND_CAP = 64
DEFAULT_ACTION_DEPTH = 8


def _positive_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", name, raw)
        return default
    if value <= 0:
        logger.warning("ignoring %s=%r: must be positive", name, raw)
        return default
    return value


def max_bound_cap() -> int:
    """Iteration cap for boundedness checks and box-tensor gates."""
    return _positive_int(ENV_MAX_BOUND_CAP, DEFAULT_MAX_BOUND_CAP)


def action_depth() -> int:
    """Input-length bound for type A closures that do not terminate."""
    return _positive_int(ENV_ACTION_DEPTH, DEFAULT_ACTION_DEPTH)
