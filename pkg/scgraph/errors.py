"""Exception hierarchy for the scgraph toolkit."""


class ScGraphError(Exception):
    """Base class for every error raised by scgraph."""


class Graph6Error(ScGraphError, ValueError):
    """A graph6 line is malformed."""


class VertexError(ScGraphError, ValueError):
    """A vertex is out of range or repeated."""


class PermutationError(ScGraphError, ValueError):
    """Not a bijection, bad cycle notation, or a size mismatch."""


class GuardExceededError(ScGraphError):
    """Input is larger than the configured desk-scale guard."""


class ConfigError(ScGraphError):
    """Invalid configuration value (environment or flags)."""


class NotSelfComplementaryError(ScGraphError):
    """The operation needs a self-complementary graph."""


class PreconditionError(ScGraphError):
    """An operation precondition other than self-complementarity failed."""


class InvalidWitnessError(ScGraphError):
    """A caller-supplied witness does not verify."""


class InconsistentWitnessError(ScGraphError):
    """A witness produced here failed re-verification.

    This signals a bug in scgraph itself, so callers should let it propagate.
    """
