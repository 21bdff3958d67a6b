"""
Logging setup shared by the CLI and the test suite
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

LOGGER_NAME = "app"
LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

_HANDLER_TAG = "_gamma_expansions_handler"


def configure_logging(level: Union[str, int] = "WARNING", log_file: Optional[Path] = None) -> logging.Logger:
    """Attach a stderr handler (and optionally a file handler) to the package logger.

    Calling it again replaces the handlers installed by the previous call.
    """
    logger = logging.getLogger(LOGGER_NAME)
    if isinstance(level, str):
        level_value = logging.getLevelName(level.upper())
        if not isinstance(level_value, int):
            raise ValueError(f"unknown log level {level!r}")
        level = level_value
    logger.setLevel(level)
    _remove_handlers(logger)

    formatter = logging.Formatter(LOG_FORMAT)
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file is not None:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    for handler in handlers:
        handler.setFormatter(formatter)
        setattr(handler, _HANDLER_TAG, True)
        logger.addHandler(handler)
    return logger


def _remove_handlers(logger: logging.Logger):
    for handler in list(logger.handlers):
        if getattr(handler, _HANDLER_TAG, False):
            logger.removeHandler(handler)
            handler.close()


def reset_logging():
    """Remove the handlers installed by configure_logging"""
    logger = logging.getLogger(LOGGER_NAME)
    _remove_handlers(logger)
    logger.setLevel(logging.NOTSET)
