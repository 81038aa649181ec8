"""Exception hierarchy for gwzero."""


class GWZeroError(Exception):
    """Base class for all errors raised by gwzero."""


class DimensionError(GWZeroError, ValueError):
    pass


class DegenerateFormError(GWZeroError, ValueError):
    pass


class ZeroClassError(GWZeroError, ValueError):
    pass


class LabelError(GWZeroError, ValueError):
    pass


class DegreeError(GWZeroError, ValueError):
    pass


class ValidationError(GWZeroError, ValueError):
    """A manifold or class violates a structural invariant."""


class HypothesisError(GWZeroError, ValueError):
    """An operation was called outside the hypotheses it needs."""


class NotDeterminedError(GWZeroError):
    """The requested quantity is not determined by the available theory.

    This is not a failure of the input: it marks the boundary of what the
    encoded theorems decide.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class ManifestError(GWZeroError, ValueError):
    pass
