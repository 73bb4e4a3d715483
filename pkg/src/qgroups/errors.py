"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all engine errors."""


# -- scalar field ----------------------------------------------------------

class DivisionByZero(EngineError, ZeroDivisionError):
    pass


class UnsupportedRadicalInverse(EngineError):
    """Division by an element with two or more radical terms."""


class PoleAtOne(EngineError):
    """Denominator vanishes at the classical point of the variable."""


class IrrationalRadicalLimit(EngineError):
    """A radical's square has no rational square root at the classical point."""


class ConflictingDefinition(EngineError):
    """A radical name is already registered with a different square."""


# -- noncommutative algebra ------------------------------------------------

class UnknownGenerator(EngineError):
    pass


class NonTerminating(EngineError):
    """Rewrite step budget exceeded (misconfigured custom system)."""


class UnknownPreset(EngineError):
    pass


class BadTermOrder(EngineError):
    """A rewrite rule is not strictly decreasing under the term order."""


# -- matrices and tensors --------------------------------------------------

class DimensionMismatch(EngineError):
    pass


class BadDecomposition(EngineError):
    pass


class SingularR(EngineError):
    """Matrix has no inverse over the field (or none reachable exactly)."""


# -- representations -------------------------------------------------------

class NonDiagonalX0(EngineError):
    pass


class NegativeSpin(EngineError):
    pass


class NotNilpotent(EngineError):
    pass


# -- oscillator ------------------------------------------------------------

class BadDimension(EngineError):
    pass


class BadSector(EngineError):
    pass


# -- q-series --------------------------------------------------------------

class PoleInLowerParameter(EngineError):
    """A lower parameter makes a series denominator vanish."""


# -- braid -----------------------------------------------------------------

class TooLarge(EngineError):
    pass


# -- cli -------------------------------------------------------------------

class ParseError(EngineError):
    def __init__(self, message: str, position: int = -1):
        super().__init__(message)
        self.position = position


class UnknownTarget(EngineError):
    pass


class UnknownObject(EngineError):
    pass
