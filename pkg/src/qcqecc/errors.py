"""Exception hierarchy shared by every module of the package."""


class QcError(Exception):
    """Base class for all package errors."""


# finite fields
class NotPrime(QcError, ValueError):
    pass


class FieldTooLarge(QcError, ValueError):
    pass


class ContextMismatch(QcError, ValueError):
    pass


class DivisionByZero(QcError, ZeroDivisionError):
    pass


class NotAQuadraticExtension(QcError, ValueError):
    pass


class ParseError(QcError, ValueError):
    pass


# polynomials
class ZeroLength(QcError, ValueError):
    pass


class LengthMismatch(QcError, ValueError):
    pass


class BothZero(QcError, ValueError):
    pass


class ZeroPolynomial(QcError, ValueError):
    pass


class DivisorZero(QcError, ZeroDivisionError):
    pass


class ZeroConstantTerm(QcError, ValueError):
    pass


class OrderBoundExceeded(QcError, ArithmeticError):
    pass


class RootOfUnityUnavailable(QcError, ArithmeticError):
    pass


# matrices
class RowCountOutOfRange(QcError, ValueError):
    pass


class DimensionMismatch(QcError, ValueError):
    pass


class OddColumns(QcError, ValueError):
    pass


# codes
class InvalidCode(QcError, ValueError):
    """Generator data violates the structural requirements of the code family."""


class GcdConditionFailed(InvalidCode):
    pass


class FormulaRankMismatch(QcError, AssertionError):
    pass


class OddIndex(QcError, ValueError):
    pass


class ShapeMismatch(QcError, ValueError):
    pass


class NotASubcode(QcError, ValueError):
    pass


class BudgetExceeded(QcError, RuntimeError):
    """Exhaustive search would exceed the enumeration budget.

    ``lower_bound`` holds the best proven lower bound on the sought weight.
    """

    def __init__(self, message, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound


# quantum constructions
class NotNested(QcError, ValueError):
    pass


class NotSelfOrthogonal(QcError, ValueError):
    pass


class ToleranceExceeded(QcError, ValueError):
    pass


class ChainInvalid(QcError, ValueError):
    pass


class CosetExponentInvalid(QcError, ValueError):
    pass


# front end
class ConfigError(QcError, ValueError):
    pass


class RangeTooLarge(QcError, ValueError):
    pass
