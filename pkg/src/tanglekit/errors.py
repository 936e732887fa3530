"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: parameter problems are usage errors,
bad files / degenerate drawings are invalid input, and
InternalInvariantError signals a bug in the toolkit itself.
"""


class TanglekitError(Exception):
    """Base class for all toolkit errors."""


class InvalidParameterError(TanglekitError, ValueError):
    """A generator or operation received out-of-range parameters."""


class CapExceededError(TanglekitError, ValueError):
    """A coordinate or size cap was exceeded; rescale or shrink the input."""


class DegenerateInputError(TanglekitError, ValueError):
    """The input violates general position (e.g. collinear edge overlap)."""


class InvalidDrawingError(TanglekitError, ValueError):
    """A drawing failed validation; the message lists the violations."""


class WrongGraphClassError(TanglekitError, ValueError):
    """The operation requires a specific graph class (e.g. a matching)."""


class PreconditionError(TanglekitError, ValueError):
    """A documented operation precondition does not hold."""


class NoReferenceLayoutError(TanglekitError, ValueError):
    """The graph carries no crossing-free reference layout."""


class NoMethodApplicableError(TanglekitError, ValueError):
    """No untangling method applies to the given drawing."""


class MalformedInputError(TanglekitError, ValueError):
    """A serialized document is malformed; message names the first violation."""


class UnknownPuzzleError(TanglekitError, KeyError):
    """The requested puzzle id is not in the store."""


class InternalInvariantError(TanglekitError, RuntimeError):
    """An internal invariant was violated; indicates a toolkit bug."""
