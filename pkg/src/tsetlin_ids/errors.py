"""Exception hierarchy and process exit codes."""


class TsetlinIdsError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ConfigError(TsetlinIdsError):
    """Invalid configuration: bad hyperparameters, presets, or flags."""

    exit_code = 2


class DataError(TsetlinIdsError):
    """Malformed input data: bad CSV, schema mismatch, bad model file."""

    exit_code = 3


class ContractViolation(TsetlinIdsError):
    """An operation was called with arguments violating its contract."""

    exit_code = 4


class ModelFormatError(DataError):
    """Model byte stream is corrupted, truncated, or has a bad version."""
