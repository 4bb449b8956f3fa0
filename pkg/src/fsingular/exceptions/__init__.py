class ImproperlyConfigured(Exception):
    """Raise for incorrect configuration."""

    pass


class ValidationError(Exception):
    """Raise for malformed user input (pair specs, graph specs, prime lists)"""

    pass


class ComputationError(Exception):
    """Base class for errors raised by the algebra modules."""

    pass


class PolynomialSyntaxError(ComputationError):
    """Raise when polynomial text does not follow the grammar"""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariableError(ComputationError):
    """Raise for a variable name that is not declared"""

    pass


class NegativeExponentError(ComputationError):
    """Raise for negative exponents in polynomial text"""

    pass


class NotPrimeError(ComputationError):
    """Raise when a characteristic is not prime"""

    pass


class ModulusMismatchError(ComputationError):
    """Raise when combining polynomials over different prime fields"""

    pass


class ArityMismatchError(ComputationError):
    """Raise when combining polynomials in different ambient rings"""

    pass


class OrderMismatchError(ComputationError):
    """Raise when comparing bases computed for different term orders"""

    pass


class NotAPrimePowerError(ComputationError):
    """Raise when a bracket exponent is not a power of the characteristic"""

    pass


class BudgetExceededError(ComputationError):
    """Raise when a step or size budget is exhausted"""

    pass


class ZeroPolynomialError(ComputationError):
    """Raise when an operation needs a nonzero polynomial"""

    pass


class ConstantTermNonzeroError(ComputationError):
    """Raise when a polynomial does not vanish at the origin"""

    pass


class ConstantInputError(ComputationError):
    """Raise when an operation needs a nonconstant polynomial"""

    pass


class ImproperIdealError(ComputationError):
    """Raise for ideals that are zero, the unit ideal, or not inside the maximal ideal"""

    pass


class NotDegreeThreeError(ComputationError):
    """Raise when a plane cubic is not homogeneous of degree three"""

    pass


class NotThreeVariablesError(ComputationError):
    """Raise when a plane cubic is not written in three variables"""

    pass


class InvalidSelfIntersectionError(ComputationError):
    """Raise for self-intersections above -2"""

    pass


class SingularSystemError(ComputationError):
    """Raise when an arm system has no unique solution"""

    pass


class NotHomogeneousError(ComputationError):
    """Raise when a hypersurface equation is not homogeneous"""

    pass


class DegenerateDehomogenizationError(ComputationError):
    """Raise when dehomogenizing leaves a constant"""

    pass
