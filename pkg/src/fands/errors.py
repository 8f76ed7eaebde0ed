"""Exception and warning types shared across the package."""


class FandsError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(FandsError, ValueError):
    """An input file is structurally unusable (missing column, bad JSON, ...)."""


class RecordError(FormatError):
    """A single record in an input file is malformed.

    The offending file is rejected as a whole; ``line`` is the 1-based
    physical line number of the record.
    """

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}: "
        elif where:
            where += " "
        super().__init__(where + message)


class ParameterError(FandsError, ValueError):
    """Invalid numeric or structural parameter."""


class DegenerateGraphError(FandsError, ValueError):
    """The graph is too small for the requested computation."""


class UniverseMismatchError(FandsError, ValueError):
    """Rankings being compared do not cover the same set of nodes."""


class SelfPairWarning(UserWarning):
    """An article both agreed and disagreed with one topic; its self-pair was dropped."""


class ConvergenceWarning(UserWarning):
    """An iterative method stopped at ``max_iters`` without meeting its tolerance."""
