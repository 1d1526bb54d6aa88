"""
Logging for the Pfaff-Darboux convexity toolkit.

One project logger ("pfaff_convex") with a rotating DEBUG file log and a
terse console log. The console goes to stderr: stdout carries CLI reports.
"""
import logging
import os
from logging.handlers import RotatingFileHandler

from config import settings

ROOT_LOGGER_NAME = "pfaff_convex"

FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s"
CONSOLE_FORMAT = "%(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _level(name: str) -> int:
    return getattr(logging, name.upper(), logging.INFO)


def _file_handler(path: str) -> logging.Handler:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    handler = RotatingFileHandler(path, maxBytes=settings.LOG_MAX_BYTES, backupCount=settings.LOG_BACKUP_COUNT,
                                  encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=DATE_FORMAT))
    return handler


def _console_handler() -> logging.Handler:
    handler = logging.StreamHandler()  # stderr
    handler.setLevel(_level(settings.LOG_CONSOLE_LEVEL))
    handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    return handler


def setup_logging(name: str = ROOT_LOGGER_NAME) -> logging.Logger:
    """Configure the project logger once; later calls return it unchanged."""
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger
    logger.setLevel(_level(settings.LOG_LEVEL))
    if settings.LOG_FILE:
        logger.addHandler(_file_handler(settings.LOG_FILE))
    logger.addHandler(_console_handler())
    logger.propagate = False
    return logger


logger = setup_logging()


def get_logger(name: str) -> logging.Logger:
    """Child logger, e.g. get_logger("darboux.pipeline") -> "pfaff_convex.darboux.pipeline"."""
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")
