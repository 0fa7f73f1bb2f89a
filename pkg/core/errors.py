"""Exception hierarchy for component-split.

Library code raises these; the CLI translates them into exit codes
(2 for bad input, 3 for a failed verification, 4 for an oracle that
would be too large).
"""


class ComponentSplitError(Exception):
    """Base class for every error raised by this package."""


class ConfigurationError(ComponentSplitError):
    """An environment setting has an unusable value."""


class DatumParseError(ComponentSplitError, ValueError):
    """A datum or lambda string could not be parsed.

    Attributes:
        text: The full input string
        position: Zero-based offset of the offending character
    """

    def __init__(self, message: str, text: str = '', position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: '{text}'"
        super().__init__(message)


class DimensionError(ComponentSplitError, ValueError):
    """Vector and lattice dimensions do not agree."""


class InvalidRootDatumError(ComponentSplitError, ValueError):
    """The requested root datum is not valid."""


class NotARootError(ComponentSplitError, ValueError):
    """A vector passed as a root is not in the root system."""


class NotASubsystemError(ComponentSplitError, ValueError):
    """A set of roots is not a root subsystem."""


class NotNormalizedError(ComponentSplitError, ValueError):
    """An operation needing a point of the fundamental alcove got another point."""


class InvalidArgumentError(ComponentSplitError, ValueError):
    """A parameter such as q, a basis or a suite name is out of range."""


class VerificationError(ComponentSplitError):
    """A theorem-check identity did not hold.

    Attributes:
        identity: Short name of the identity that failed
        instance: JSON-serialisable description of the failing case
    """

    def __init__(self, identity: str, instance: dict | None = None, detail: str = ''):
        self.identity = identity
        self.instance = instance or {}
        message = f"Verification failed: {identity}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class SearchExhaustedError(VerificationError):
    """The generic lift search found no valid torus correction."""


class OracleSizeError(ComponentSplitError):
    """A brute-force oracle was asked to enumerate a group above the limit."""

    def __init__(self, order: int, limit: int):
        self.order = order
        self.limit = limit
        super().__init__(f"Weyl group of order {order} exceeds the oracle limit {limit}")
