"""Exception types shared across the package.

Two error families matter to callers: bad input (rejected data, malformed
specs, precondition violations) and resource limits (size caps, memo
growth). The CLI maps them to exit codes 2 and 3 respectively.
"""


class InputError(ValueError):
    """Raised when input data or parameters are invalid."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation exceeds a configured size or memory cap."""
