"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: ArgumentError -> 2,
ConfigurationError -> 3, OracleUnavailableError -> 4, anything else -> 5.
"""


class FairdagError(Exception):
    """Base class for all toolkit errors."""


class ArgumentError(FairdagError, ValueError):
    """A caller supplied an invalid argument (bad index, range, shape...)."""


class DegenerateDataError(ArgumentError):
    """Input data cannot support the requested computation (e.g. n <= p)."""


class CyclicGraphError(FairdagError):
    """An operation requiring a DAG was handed a cyclic graph."""


class ConfigurationError(FairdagError):
    """Missing or inconsistent run configuration (env vars, config files)."""


class OracleUnavailableError(FairdagError):
    """The live oracle could not be reached after all retries."""


class MalformedAnswerError(FairdagError):
    """The oracle reply could not be parsed into a verdict."""

    def __init__(self, message: str, raw_text: str = ""):
        super().__init__(message)
        self.raw_text = raw_text
