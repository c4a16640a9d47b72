from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("rankred")
except PackageNotFoundError:
    # package is not installed
    __version__ = "dev"
