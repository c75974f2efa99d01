"""Exception hierarchy.

Every error raised by the library derives from :class:`CSFError`, and most
also derive from :class:`ValueError` so callers that only care about "bad
input" can catch that.
"""


class CSFError(Exception):
    """Base class for all library errors."""


class NotATree(CSFError, ValueError):
    """Edge list is disconnected, cyclic, or has the wrong edge count."""


class BadLabel(CSFError, ValueError):
    """A vertex label is outside ``0..order-1``."""


class NoTrunk(CSFError, ValueError):
    """The tree is a path, so it has no vertex of degree >= 3."""


class EdgeNotInTree(CSFError, ValueError):
    pass


class BoundExceeded(CSFError, ValueError):
    """An exponential-cost operation was asked to run above its size cap."""

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what}: size {size} exceeds bound {bound}")
        self.what = what
        self.size = size
        self.bound = bound


class WeightMismatch(CSFError, ValueError):
    pass


class BadExponent(CSFError, ValueError):
    pass


class IdentityComposition(CSFError, ValueError):
    """The identity composition (1) has no irreducible factorization."""


class HypothesisViolated(CSFError, ValueError):
    pass


class BadComposition(CSFError, ValueError):
    pass


class NotAProperQCaterpillar(CSFError, ValueError):
    pass
