"""Exception hierarchy shared by all modules."""


class HyperperiodicError(Exception):
    """Base class for every error raised by the package."""


class InvalidRotation(HyperperiodicError, ValueError):
    pass


class InvalidTotalValency(HyperperiodicError, ValueError):
    pass


class ExponentOutOfRange(HyperperiodicError, ValueError):
    pass


class NotAnInvolution(HyperperiodicError, ValueError):
    pass


class NonOrientableGluing(HyperperiodicError, ValueError):
    pass


class NotEquivariant(HyperperiodicError, ValueError):
    pass


class InvalidAction(HyperperiodicError, ValueError):
    """An orbifold epimorphism failed one of its defining checks."""


class OrderMismatch(InvalidAction):
    pass


class RelationViolated(InvalidAction):
    pass


class NotSurjective(InvalidAction):
    pass


class RiemannHurwitzFailed(InvalidAction):
    pass


class IdentityElement(HyperperiodicError, ValueError):
    pass


class NotHyperelliptic(HyperperiodicError, ValueError):
    pass


class MissingRule(HyperperiodicError, LookupError):
    """A rewriting table has no entry for ``symbol``.

    ``position`` is the index of the failing factor when the error comes out of
    :func:`~hyperperiodic.words.apply_sequence` (``None`` otherwise).
    """

    def __init__(self, symbol: str, endomorphism: str, position: int | None = None):
        self.symbol = symbol
        self.endomorphism = endomorphism
        self.position = position
        where = f" (factor {position})" if position is not None else ""
        super().__init__(f"{endomorphism} has no rule for {symbol}{where}")

    def at(self, position: int) -> "MissingRule":
        return MissingRule(self.symbol, self.endomorphism, position)
