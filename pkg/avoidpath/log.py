# -*- encoding: utf-8 -*-
"""
Logger configuration for the command line and for the worker processes
of the exhaustive sweep.

stdout carries the result documents, so nothing here ever writes to it.
"""

import logging
import logging.handlers
import sys
import typing as T

_INSTALLED = []  # type: T.List[logging.Handler]


def setup_log(
    config: T.Dict[T.Text, T.Any], worker: bool = False
) -> logging.Logger:
    """
    Setup the root logger from the ``log`` section of the configuration.
    Calling it again replaces the handlers installed by the previous call.
    """
    fmt = setup_formatter(worker)
    level = getattr(logging, config["level"])
    handlers = [setup_console_handler(fmt, level)]
    if config["syslog"]:
        handlers.append(setup_syslog_handler(fmt, level))
    path = config.get("log_file")
    # a rotating file must have a single writer
    if path and not worker:
        handlers.append(setup_file_handler(path, fmt, level))

    logger = logging.getLogger()
    logger.setLevel(level=level)
    while _INSTALLED:
        old = _INSTALLED.pop()
        logger.removeHandler(old)
        old.close()
    for hdlr in handlers:
        logger.addHandler(hdlr)
        _INSTALLED.append(hdlr)

    return logger


def setup_worker_log(config: T.Optional[T.Dict[T.Text, T.Any]]) -> None:
    """Initializer of the exhaustive process pool."""
    if config is not None:
        setup_log(config, worker=True)


def setup_formatter(worker: bool = False) -> logging.Formatter:
    origin = "%(processName)s|%(name)s" if worker else "%(name)s|%(module)s"
    return logging.Formatter(
        fmt="%(levelname)s -> [%(asctime)s][" + origin + "] %(message)s"
    )


def setup_console_handler(fmt: logging.Formatter, level: int) -> logging.Handler:
    handler = logging.StreamHandler(stream=sys.stderr)
    handler.setFormatter(fmt)
    handler.setLevel(level)
    return handler


def setup_syslog_handler(fmt: logging.Formatter, level: int) -> logging.Handler:
    handler = logging.handlers.SysLogHandler()
    handler.setFormatter(fmt)
    handler.setLevel(level)
    return handler


def setup_file_handler(
    filename: T.Text, fmt: logging.Formatter, level: int
) -> logging.Handler:
    """Size-capped log file, rotated at 10 MiB with three backups."""
    handler = logging.handlers.RotatingFileHandler(
        filename, maxBytes=10 * 1024 * 1024, backupCount=3
    )
    handler.setFormatter(fmt)
    handler.setLevel(level)
    return handler
