import logging
import sys
from pathlib import Path

from loguru import logger

_COMPACT_FORMAT = "[ {time:HH:mm:ss.SSS} | <level>{level: <8}</level>] <level>{message}</level>"
_DETAILED_FORMAT = (
    "[ {time:HH:mm:ss.SSS} | <level>{level: <8}</level> | {name}:{function}:{line} ] <level>{message}</level>"
)
_FILE_FORMAT = "[ {time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} ] {message}"


class _InterceptHandler(logging.Handler):
    def emit(self, record: logging.LogRecord):
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        logger.opt(depth=3, exception=record.exc_info).log(level, record.getMessage())


def logger_setup(log_file: Path | None, verbosity: int = 0):
    """
    Route everything through loguru. verbosity < 0 (-q) shows warnings only, 0 shows run summaries,
    > 0 (-v) adds per-sample and per-node detail with source locations. The optional log file always
    records INFO and above.
    """

    logging.getLogger("filelock").setLevel(logging.WARNING)

    logger.remove()

    # replace all stdlib loggers with _InterceptHandlers that log to loguru
    logging.basicConfig(handlers=[_InterceptHandler()], level=0, force=True)

    if verbosity < 0:
        level, format_ = "WARNING", _COMPACT_FORMAT
    elif verbosity == 0:
        level, format_ = "INFO", _COMPACT_FORMAT
    else:
        level, format_ = "DEBUG", _DETAILED_FORMAT
    logger.add(sys.__stderr__, format=format_, level=level, colorize=True)  # type: ignore

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            format=_FILE_FORMAT,
            level="INFO",
            colorize=False,
            enqueue=True,
            rotation="1 week",
        )


def logger_cleanup():
    """Flush all queues before shutting down so any in-flight logs are written to disk"""
    logger.complete()
