import importlib.metadata
import logging

try:
    __version__ = importlib.metadata.version("selfmonitor")
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0"


logger = logging.getLogger("selfmonitor")
logger.setLevel(logging.INFO)
