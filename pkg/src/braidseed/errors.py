"""Error taxonomy shared by all braidseed modules.

Every failure mode that callers are expected to handle has its own class so
that the CLI can map any BraidseedError to exit code 2 while tests can pin
the precise condition.
"""
from __future__ import annotations


class BraidseedError(Exception):
    """Base class for all library errors."""


# Cartan layer.
class NotGCM(BraidseedError):
    pass


class NotSymmetrizable(BraidseedError):
    pass


class DimensionMismatch(BraidseedError):
    pass


class NotFiniteType(BraidseedError):
    pass


# Word and move layer.
class MoveNotApplicable(BraidseedError):
    pass


class UnsupportedCartanPair(BraidseedError):
    """A 6-move pattern (c_ij * c_ji = 3) would be required; excluded by design."""


class BudgetExhausted(BraidseedError):
    pass


class NotConnected(BraidseedError):
    """Move-graph search failed to reach the target word.

    ``definitive`` is True when the whole component was enumerated, in which
    case the two words represent different monoid elements; False means the
    node budget ran out first and the answer is indeterminate.
    """

    def __init__(self, message: str, definitive: bool):
        super().__init__(message)
        self.definitive = definitive


class InvalidBox(BraidseedError):
    pass


# Order and transition layer.
class LengthMismatch(BraidseedError):
    pass


class IncomparableLeadingTerms(BraidseedError):
    pass


class NegativeEntry(BraidseedError):
    pass


class CaseNotTabulated(BraidseedError):
    pass


# Seed layer.
class NoIntegralSolution(BraidseedError):
    pass


class ShapeMismatch(BraidseedError):
    pass


class ContextMismatch(BraidseedError):
    pass


class FrozenIndex(BraidseedError):
    pass


class NonExactDivision(BraidseedError):
    pass


class TropicalIncomparable(BraidseedError):
    pass


class ZeroBlockViolated(BraidseedError):
    pass


class ExchangeSetNotPreserved(BraidseedError):
    pass


class MutationIndexFrozen(BraidseedError):
    pass


class MinorNotReachable(BraidseedError):
    pass


# Q-datum layer.
class NotSimplyLaced(BraidseedError):
    pass


class HeightParityViolation(BraidseedError):
    pass


class NotASource(BraidseedError):
    pass


class PointOutsideLattice(BraidseedError):
    pass


class SeriesOrderInsufficient(BraidseedError):
    pass


class NonContiguousWindow(BraidseedError):
    pass


class NotInvertibleAtOrder(BraidseedError):
    pass


# CLI layer.
class ConfigInvalid(BraidseedError):
    pass
