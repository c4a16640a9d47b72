"""Runtime settings read from the environment (and a local .env file)."""

import os
from typing import Optional

from dotenv import load_dotenv
from loguru import logger

from rankred.utils.constants import DEFAULT_ENUMERATION_CAP, DEFAULT_SEED
from rankred.utils.exceptions import InvalidParameterError

load_dotenv()


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}, not an integer. Falling back to {default}")
        return default


_RANKRED_CAP = _int_from_env("RANKRED_CAP", DEFAULT_ENUMERATION_CAP)
_RANKRED_SEED = _int_from_env("RANKRED_SEED", DEFAULT_SEED)


def set_enumeration_cap(cap: Optional[int]):
    r"""
    Optionally override the enumeration cap used by every exhaustive solver.

    Args:
        cap (int): maximum ground/vertex/edge count an exhaustive search accepts.
    """
    if cap is None:
        return
    if cap < 0:
        raise InvalidParameterError("cap", cap, "must be non-negative")
    global _RANKRED_CAP
    _RANKRED_CAP = int(cap)


def get_enumeration_cap() -> int:
    """
    Returns the enumeration cap (RANKRED_CAP, default 16).
    """
    return _RANKRED_CAP


def resolve_cap(cap: Optional[int]) -> int:
    """Returns `cap` if given, the configured enumeration cap otherwise."""
    if cap is None:
        return get_enumeration_cap()
    if cap < 0:
        raise InvalidParameterError("cap", cap, "must be non-negative")
    return cap


def set_default_seed(seed: Optional[int]):
    if seed is None:
        return
    global _RANKRED_SEED
    _RANKRED_SEED = int(seed)


def get_default_seed() -> int:
    """
    Returns the seed suites use when none is given (RANKRED_SEED, default 1).
    """
    return _RANKRED_SEED
