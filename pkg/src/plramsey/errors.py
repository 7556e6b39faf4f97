"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all plramsey errors."""


class CycleError(Error):
    """Transitive closure of the given pairs would relate an element to itself.

    ``cycle`` holds one offending cycle as a list of elements, first == last.
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        path = " -> ".join(str(e) for e in self.cycle)
        super().__init__(f"relation generators contain a cycle: {path}")


class EmptyStructureError(Error):
    """Structures on zero elements are rejected everywhere."""


class ArityMismatchError(Error):
    """Two structures that must share the same number of linear orders do not."""


class SizeMismatchError(Error):
    """An element-count precondition failed (e.g. subset size vs pattern size)."""


class ShapeMismatchError(Error):
    """Embeddings being composed do not fit together."""


class ArityError(Error):
    """A join factor must carry exactly one linear order."""


class InvalidComponentError(Error):
    """A component map is not an embedding of the pattern slice into its factor.

    ``index`` is the offending coordinate (0-based).
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"component {index} is not a valid embedding")


class OracleFailure(Error):
    """A witness oracle could not supply a witness for the requested instance."""


class PlanOverflowError(Error):
    """A required color count exceeded the configured bound during planning."""


class NotMonochromaticError(Error):
    """Extraction failed to find a monochromatic copy.

    Impossible for plans built from genuine Ramsey witnesses; raising this
    signals that a supplied witness was not actually Ramsey.
    """


class ParseError(Error):
    """A text file did not parse.  Carries file name and line number."""

    def __init__(self, source, line, reason):
        self.source = source
        self.line = line
        self.reason = reason
        super().__init__(f"{source}:{line}: {reason}")
