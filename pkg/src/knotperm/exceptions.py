from __future__ import annotations


class KnotpermError(Exception):
    """Base class for every failure raised by knotperm."""


class InternalInconsistency(KnotpermError):
    """A state that the underlying theorems rule out was reached."""


class MalformedInput(KnotpermError, ValueError):
    pass


class NotABijection(KnotpermError, ValueError):
    pass


class NotAPermutation(KnotpermError, ValueError):
    pass


class HasFixedPoint(KnotpermError):
    """The operation needs a link diagram, so every index must move."""


class SameComponent(KnotpermError):
    pass


class OddCrossingCount(InternalInconsistency):
    pass


class SlotOutOfRange(KnotpermError, ValueError):
    pass


class TreeSyntaxError(KnotpermError, ValueError):
    def __init__(self, text: str, position: int, message: str):
        super().__init__(f"{message} at offset {position} in {text!r}")
        self.text = text
        self.position = position


class NotAKink(KnotpermError):
    pass


class TooSmall(KnotpermError):
    pass


class NotACycle(KnotpermError):
    pass


class SupportNotInvariant(KnotpermError):
    pass


class CapExceeded(KnotpermError):
    def __init__(self, n: int, cap: int, what: str):
        super().__init__(f"n={n} exceeds the configured {what} cap of {cap}")
        self.n = n
        self.cap = cap
        self.what = what


class NoSeriesRoot(InternalInconsistency):
    pass


class InvalidRenderSpec(KnotpermError, ValueError):
    pass


class ComponentsCross(KnotpermError):
    """Two distinct components of the diagram cross each other."""
