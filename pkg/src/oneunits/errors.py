"""Domain exceptions shared by every module in the package."""

__all__ = [
    "OneUnitsError",
    "ModulusMismatch",
    "ShapeMismatch",
    "DivisionByZero",
    "NonUnitConstantTerm",
    "PrecisionExhausted",
    "NotAPthPower",
    "NonzeroConstantInner",
    "DenominatorNotCoprime",
    "NonUnitExponent",
    "WindowTooSmall",
    "InconsistentReport",
    "NotAnEndomorphism",
    "TooLargeToEnumerate",
]


class OneUnitsError(Exception):
    """Base class for every arithmetic and decision-procedure error."""


class ModulusMismatch(OneUnitsError):
    """Operands were built over different prime moduli."""


class ShapeMismatch(OneUnitsError):
    """Operands carry different truncation precisions."""


class DivisionByZero(OneUnitsError, ZeroDivisionError):
    """Multiplicative inverse of the zero residue."""


class NonUnitConstantTerm(OneUnitsError):
    """Series inversion needs a nonzero constant term."""


class PrecisionExhausted(OneUnitsError):
    """The operation needs more digits or coefficients than the operand carries."""


class NotAPthPower(OneUnitsError):
    """A nonzero coefficient sits at an index not divisible by p."""


class NonzeroConstantInner(OneUnitsError):
    """Series composition needs an inner series with zero constant term."""


class DenominatorNotCoprime(OneUnitsError):
    """The denominator shares a factor with the prime modulus."""


class NonUnitExponent(OneUnitsError):
    """Inversion mod p^K needs a unit, i.e. a nonzero first digit."""


class WindowTooSmall(OneUnitsError):
    """The window cannot hold the requested preperiod plus two full periods."""


class InconsistentReport(OneUnitsError):
    """A periodicity report does not reproduce the sequence it claims to describe."""


class NotAnEndomorphism(OneUnitsError):
    """Exponent recovery hit a coefficient pattern no 1-unit power produces.

    ``stage`` records the recovery round whose support assertion failed,
    when that is where the rejection happened.
    """

    def __init__(self, stage=None, detail=None):
        self.stage = stage
        self.detail = detail
        if stage is not None:
            message = f"not an endomorphism (stage {stage})"
        elif detail is not None:
            message = f"not an endomorphism ({detail})"
        else:
            message = "not an endomorphism"
        super().__init__(message)


class TooLargeToEnumerate(OneUnitsError):
    """The exhaustive scan would exceed the enumeration guard."""
