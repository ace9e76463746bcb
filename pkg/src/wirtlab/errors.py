"""Exception types.

Every hypothesis gate raises a subclass of :class:`GateError`; its ``gate``
attribute names the violated precondition so the CLI can report it.
"""


class WirtlabError(ValueError):
    """Base class for all package errors."""


class GateError(WirtlabError):
    gate = "hypothesis"


class OrderError(GateError):
    gate = "order"


class NonzeroMeanError(GateError):
    gate = "zero mean"


class AliasingError(GateError):
    gate = "aliasing"


class RegularityError(GateError):
    gate = "regularity"


class NonSimpleCurveError(GateError):
    gate = "simplicity check"


class ConvexityError(GateError):
    gate = "convexity"


class ArithmeticFault(WirtlabError):
    """An exact computation produced an impossible result."""
