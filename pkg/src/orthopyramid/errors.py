"""Exception hierarchy shared across the toolkit.

The split matters to callers: plain ``ValueError`` (and
``ZeroDivisionError``) signal misuse of an operation, ``ConfigurationError``
subclasses signal mathematically well-formed input that the requested
computation rejects, and ``GuardExceededError`` signals a search bound over
its safety guard. The CLI and service map these onto exit codes / HTTP
statuses.
"""


class OrthopyramidError(Exception):
    """Base class for domain errors raised by this package."""


class ConfigurationError(OrthopyramidError):
    """Input is well-formed but outside the configuration an operation covers."""


class NotOrthogonalError(ConfigurationError):
    """A matrix required to be orthogonal is not."""


class OrientationError(ConfigurationError):
    """An orthogonal matrix has the wrong determinant sign for the operation."""


class DegenerateInstanceError(ConfigurationError):
    """Problem generation hit a zero coefficient: a named segment collapses."""


class ConfigurationRejectedError(ConfigurationError):
    """Strict generation rejected an instance; carries the computed flags."""

    def __init__(self, message, flags=None):
        super().__init__(message)
        self.flags = flags


class NotASquareError(ConfigurationError):
    """An orthogonality norm is not a perfect square, so no rational rescale exists."""


class ChainConfigurationError(ConfigurationError):
    """A solution-chain stage cannot proceed for these data; tagged with the stage."""

    def __init__(self, stage, message):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


class GuardExceededError(OrthopyramidError):
    """A search bound exceeds its guard; refuse rather than run away."""


class InternalConsistencyError(OrthopyramidError):
    """A cross-check that must hold for valid input failed (a bug, not bad data)."""
