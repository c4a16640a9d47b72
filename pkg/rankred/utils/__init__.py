from .config import (
    get_default_seed,
    get_enumeration_cap,
    resolve_cap,
    set_default_seed,
    set_enumeration_cap,
)
from .package_utils import has_package, requires_package

__all__ = [
    "get_default_seed",
    "get_enumeration_cap",
    "resolve_cap",
    "set_default_seed",
    "set_enumeration_cap",
    "has_package",
    "requires_package",
]
