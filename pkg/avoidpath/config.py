# -*- encoding: utf-8 -*-
"""
Read and validate the config.

The configuration file is optional and only read when given explicitly
with ``--config``; command line flags override it.
"""

import os
import typing as T

import yaml


def merge_configs(
    config: T.Dict[T.Text, T.Any], shell_config: T.Dict[T.Text, T.Any]
) -> T.Dict[T.Text, T.Any]:
    """
    Merge the configuration from file with the one from command
    line parameters, favouring the latter.
    """
    out_config = {}
    for key in config:
        if key != "log":
            out_config[key] = shell_config.get(key, config.get(key))
    out_config["log"] = dict(config["log"])
    for key, val in shell_config.get("log", {}).items():
        if val is not None:
            out_config["log"][key] = val

    return out_config


def read_config(conf_file: T.Optional[T.Text] = None) -> T.Dict[T.Text, T.Any]:
    """
    Parse and validate the configuration file, if any.
    """
    if not conf_file:
        return _defaults()
    with open(conf_file) as f:
        conf = yaml.safe_load(f) or {}
    if not isinstance(conf, dict):
        raise ValueError(f"configuration must be a mapping, got: {conf!r}")

    unknown = set(conf) - set(DEFAULT)
    if unknown:
        raise ValueError(
            f"unknown keys in configuration: {', '.join(sorted(unknown))}"
        )

    out_conf = {}
    for conf_k, conf_v in _defaults().items():
        out_conf[conf_k] = _validate(conf_k, conf.get(conf_k), conf_v)

    return out_conf


def _defaults() -> T.Dict[T.Text, T.Any]:
    out = dict(DEFAULT)
    out["log"] = dict(DEFAULT_LOG_CONF)
    return out


def _validate(key: T.Text, datum: T.Any, default: T.Any) -> T.Any:
    if datum is not None:
        return VALIDATE[key](datum)  # type: ignore
    return default


def _validate_log(log_conf: T.Dict[T.Text, T.Any]) -> T.Dict[T.Text, T.Any]:
    log_level = log_conf.get("level", DEFAULT_LOG_CONF["level"]).upper()
    if log_level not in LOG_LEVELS:
        raise ValueError(
            f"'level' is invalid in configuration: {log_level}\
                Allowed values are ('DEBUG', 'INFO', 'WARNING', 'ERROR')"
        )
    syslog = log_conf.get("syslog", DEFAULT_LOG_CONF["syslog"])
    if not isinstance(syslog, bool):
        raise ValueError(
            f"'syslog' is invalid in configuration: {syslog}\
                Allowed values are ('true', 'false')"
        )
    conf = {"level": log_level, "syslog": syslog}
    log_file = log_conf.get("log_file")
    if log_file:
        if not os.path.exists(os.path.dirname(os.path.abspath(log_file))):
            raise ValueError(
                f"'log_file' is invalid in configuration: {log_file}\
                    Base directory does not exist."
            )
        conf["log_file"] = log_file

    return conf


def _validate_positive(key: T.Text) -> T.Callable[[T.Any], int]:
    def validate(value: T.Any) -> int:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ValueError(f"'{key}' is invalid in configuration: {value}")
        return value

    return validate


def _validate_gnp_p(p: T.Any) -> float:
    if isinstance(p, bool) or not isinstance(p, (int, float)) or not 0 <= p <= 1:
        raise ValueError(f"'gnp_p' is invalid in configuration: {p}")
    return float(p)


LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

DEFAULT_LOG_CONF = {"level": "WARNING", "syslog": False}
DEFAULT = {
    "log": DEFAULT_LOG_CONF,
    "workers": 1,
    "chunk_size": 4096,
    "gnp_p": 0.5,
}

VALIDATE = {
    "log": _validate_log,
    "workers": _validate_positive("workers"),
    "chunk_size": _validate_positive("chunk_size"),
    "gnp_p": _validate_gnp_p,
}
