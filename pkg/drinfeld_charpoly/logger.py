"""Logging setup for the drinfeld_charpoly package."""

import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

PACKAGE = "drinfeld_charpoly"
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(name)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# third-party loggers kept at WARNING whatever the package level
QUIET_LOGGERS = ("filelock",)


def setup_logging(level: int | str = logging.INFO, stream: Optional[TextIO] = None) -> None:
    """
    Attach one console handler to the root logger.

    Command output (charpoly text, JSON, CSV) owns stdout, so records go to
    stderr unless another stream is given.

    Args:
        level: Level for the package loggers and the handler (default: INFO)
        stream: Target stream (default: sys.stderr)
    """
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
    handler.setLevel(level)

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.addHandler(handler)
    root_logger.setLevel(level)
    logging.getLogger(PACKAGE).setLevel(level)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)

    logging.getLogger(PACKAGE).debug(f"Logging configured at {logging.getLevelName(handler.level)}")


def get_logger(name: str) -> logging.Logger:
    """Logger for a module; scripts run as __main__ log under the package name."""
    if name == "__main__":
        return logging.getLogger(PACKAGE)
    if not name.startswith(PACKAGE):
        name = f"{PACKAGE}.{name}"
    return logging.getLogger(name)


@contextmanager
def log_duration(logger: logging.Logger, label: str, level: int = logging.INFO) -> Iterator[dict]:
    """
    Log how long the block took.

    Yields a dict whose "seconds" entry is filled in on exit, for callers
    that also need the measurement.
    """
    timing: dict = {}
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing["seconds"] = time.perf_counter() - start
        logger.log(level, f"{label} took {timing['seconds']:.4f}s")
