"""Exception types raised by wignerlab operations."""


class WignerlabError(Exception):
    """Base class for all wignerlab errors."""


class GridError(WignerlabError, ValueError):
    """Invalid grid parameters (n < 2, max <= min, ...)."""


class ShapeError(WignerlabError, ValueError):
    """Array shape does not match the grid it claims to live on."""


class TailMassError(WignerlabError, ValueError):
    """Grid too narrow: state carries non-negligible mass near the boundary."""


class NormalizationError(WignerlabError, ValueError):
    """Input density or wavefunction is not normalized."""


class WeightError(WignerlabError, ValueError):
    """Mixture weights are negative or do not sum to one."""


class SymplecticError(WignerlabError, ValueError):
    """Affine map is not area-preserving."""


class MonotoneCaseError(WignerlabError, ValueError):
    """Degenerate configuration where the probability curve is monotonic."""


class DomainError(WignerlabError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class NegativityError(WignerlabError, ValueError):
    """Marginal came out more negative than quadrature noise allows."""
