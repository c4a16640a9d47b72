import importlib
from functools import wraps
from types import ModuleType
from typing import Any, Callable, TypeVar

F = TypeVar("F", bound=Callable[..., Any])


class MissingOptionalDependencyError(BaseException):
    """
    Raised when a feature needs an optional dependency (networkx for graph export)
    that is not installed.

    Attributes
    ----------
    library_name
        The name of the missing library.
    """

    def __init__(self, library_name: str):
        message = (
            f"The optional {library_name} package is required for this feature. "
            + f"Install it with `pip install {library_name}` or `pip install rankred[dev]`."
        )
        super().__init__(message)
        self.library_name = library_name


def has_package(package_name: str) -> bool:
    """
    Check whether an optional package can be imported.

    Parameters
    ----------
    package_name : str
        Importable name of the package.

    Examples
    --------
    >>> has_package('numpy')
    True
    >>> has_package('other_non_installed_package')
    False
    """
    try:
        importlib.import_module(package_name)
    except ModuleNotFoundError:
        return False
    return True


def import_optional(package_name: str) -> ModuleType:
    """Import an optional package or raise `MissingOptionalDependencyError`."""
    try:
        return importlib.import_module(package_name)
    except ImportError:
        raise MissingOptionalDependencyError(library_name=package_name)


def requires_package(package_name: str) -> Callable[..., Any]:
    """
    Decorator for functions that need an optional package.
    The check runs on every call so importing rankred never needs the package.
    """

    def inner_decorator(function: F) -> F:
        @wraps(function)
        def wrapper(*args, **kwargs):
            import_optional(package_name)
            return function(*args, **kwargs)

        return wrapper

    return inner_decorator
