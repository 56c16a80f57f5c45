"""Exception hierarchy shared across the package."""


class CmsError(Exception):
    """Base class for every error raised by this library."""


# -- graph construction -------------------------------------------------

class LoopEdgeError(CmsError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(CmsError):
    """The same vertex pair appears twice in an edge list."""


class VertexOutOfRangeError(CmsError):
    """An edge endpoint is not in [0, n)."""


# -- orderings -----------------------------------------------------------

class SameEdgeError(CmsError):
    """Distance queries need two distinct edges."""


class OverlappingEdgesError(CmsError):
    """Concatenated orderings must use disjoint edge sets."""


class EdgeNotInGraphError(CmsError):
    """An edge index is not part of the ordering or graph at hand."""


# -- construction preconditions -------------------------------------------

class PreconditionViolatedError(CmsError):
    """Input does not satisfy the stated hypotheses of a construction."""


class SizeMismatchError(PreconditionViolatedError):
    """Two matchings that must have equal size do not."""


class NotMatchingError(PreconditionViolatedError):
    """An edge set that must be a matching is not."""


class NotTwoRegularError(PreconditionViolatedError):
    """The graph is not 2-regular."""


class TooSmallError(PreconditionViolatedError):
    """The instance is below the minimum size the construction supports."""


# -- coloring -------------------------------------------------------------

class SearchCapExceededError(CmsError):
    """The instance is larger than the configured exact-search cap."""


class TooFewClassesError(CmsError):
    """Requested class count is below the chromatic index."""


# -- exact oracle ----------------------------------------------------------

class BudgetExceededError(CmsError):
    """Search budget ran out; carries the certified interval found so far.

    ``lo`` is the largest value proven attainable (with ``ordering`` as the
    witness) and ``hi`` the smallest proven upper bound.
    """

    def __init__(self, message, lo, hi, ordering=None, nodes=0):
        super().__init__(message)
        self.lo = lo
        self.hi = hi
        self.ordering = ordering
        self.nodes = nodes


class InvalidHintError(CmsError):
    """A caller-supplied bound hint is out of its valid range."""


# -- partitioning / sequencing ----------------------------------------------

class P1ViolatedError(CmsError):
    """The (x, w) pair fails the size arithmetic gate (property P1)."""


class GrowthStuckError(CmsError):
    """Internal growth invariant failed; should be unreachable when the
    preconditions hold.  Reported rather than silently patched."""


class RetriesExhaustedError(CmsError):
    """Randomized sampling never produced an acceptable (x, w) pair."""

    def __init__(self, message, best_x=0, best_w=0):
        super().__init__(message)
        self.best_x = best_x
        self.best_w = best_w


class PartitionInvalidError(CmsError):
    """A partition failed verification of one of its defining properties."""


# -- generators --------------------------------------------------------------

class KTooSmallError(PreconditionViolatedError):
    """Family parameter k is below its minimum."""


class KEvenError(PreconditionViolatedError):
    """This family member is only defined for odd k."""


class LengthTooSmallError(PreconditionViolatedError):
    """Cycle length below 3."""


class GenerationFailedError(CmsError):
    """Random generation hit its retry cap."""


# -- file formats --------------------------------------------------------------

class FormatError(CmsError):
    """A file does not conform to the expected text format."""
