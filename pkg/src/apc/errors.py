"""Exception hierarchy shared by every module."""

from __future__ import annotations

import enum


class ApcError(Exception):
    """Base class for all errors raised by this package."""


class VertexNotOnCycle(ApcError):
    pass


class NotAlternating(ApcError):
    pass


# -- instance construction -------------------------------------------------


class InstanceError(ApcError):
    """An instance (or instance document) failed validation."""


class MissingExteriorEdge(InstanceError):
    pass


class DuplicateEdge(InstanceError):
    pass


class NonAlternatingHamCycle(InstanceError):
    pass


class OverlappingSummands(InstanceError):
    pass


class IndexOutOfRange(InstanceError):
    pass


class TooFewSummands(InstanceError):
    pass


class BadSize(InstanceError):
    pass


class VertexInTarget(ApcError):
    pass


# -- structure -------------------------------------------------------------


class GoodPairPresent(ApcError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ViolationKind(enum.Enum):
    GOOD_PAIR = "good pair"
    GOOD_CYCLE = "good cycle"
    SINGULAR_SIDE = "singular side"


class HypothesisViolated(ApcError):
    """The instance does not satisfy the pancyclicity hypotheses.

    ``witness`` carries the offending object: a ``GoodPair``, a good 4-cycle
    (tuple of vertices) or a singular ``(vertex, color)``.
    """

    def __init__(self, kind: ViolationKind, witness, detail: str = ""):
        self.kind = kind
        self.witness = witness
        msg = f"hypothesis violated: {kind.value}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class GenerationFailed(ApcError):
    """A generator exhausted its retries without meeting its target."""


# -- synthesis -------------------------------------------------------------


class ParamOutOfRange(ApcError):
    pass


class OddT(ParamOutOfRange):
    pass


class DegenerateRange(ApcError):
    pass


class LengthOutOfRange(ApcError):
    pass


class OddLength(LengthOutOfRange):
    pass


class NotDisjoint(ApcError):
    pass


class NotAGoodPair(ApcError):
    pass


class ConstructionError(ApcError):
    """A construction produced something that failed verification.

    Never expected; signals a bug rather than a bad input.
    """


# -- oracle ----------------------------------------------------------------


class BudgetExceeded(ApcError):
    pass


class OddOrder(ApcError):
    pass
