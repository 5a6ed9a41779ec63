"""Exception hierarchy shared by every detlab module."""


class DetLabError(Exception):
    """Base class for all detlab errors."""


class FieldMismatch(DetLabError, TypeError):
    """Operands live in different fields."""


class DivisionByZero(DetLabError, ZeroDivisionError):
    pass


class ParseError(DetLabError, ValueError):
    pass


class DimensionMismatch(DetLabError, ValueError):
    pass


class IndexOutOfRange(DetLabError, IndexError):
    pass


class ZeroScaleFactor(DetLabError, ValueError):
    pass


class NotSquare(DetLabError, ValueError):
    pass


class ArityMismatch(DetLabError, ValueError):
    pass


class EngineDisagreement(DetLabError, RuntimeError):
    """The cofactor and elimination engines returned different values.

    Both compute the unique normalized determinant, so this always
    indicates a bug.
    """

    def __init__(self, cofactor, elimination):
        self.cofactor = cofactor
        self.elimination = elimination
        super().__init__(
            f"determinant engines disagree: cofactor={cofactor}, "
            f"elimination={elimination}"
        )


class NotInSubspace(DetLabError, ValueError):
    pass


class DependentInput(DetLabError, ValueError):
    pass


class NoNonvanishingTuple(DetLabError, RuntimeError):
    pass


class NotProportional(DetLabError, ValueError):
    """A sampled tuple breaks the ratio D2(T) = c * D1(T)."""

    def __init__(self, constant, witness, d1_value, d2_value):
        self.constant = constant
        self.witness = witness
        self.d1_value = d1_value
        self.d2_value = d2_value
        super().__init__(
            f"not proportional: expected {constant} * {d1_value}, got {d2_value}"
        )


class SingularSystem(DetLabError, ArithmeticError):
    """Coefficient vectors are linearly dependent.

    ``certificate`` holds coefficients ``c`` with ``sum(c[i] * v[i]) == 0``
    and at least one ``c[i] != 0``.
    """

    def __init__(self, rank, certificate):
        self.rank = rank
        self.certificate = certificate
        super().__init__(f"singular system (rank {rank})")
