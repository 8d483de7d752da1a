"""Exception types shared across the package."""


class HyperqError(Exception):
    """Base class for all errors raised by this package."""


class SingularValue(HyperqError):
    """An operation hit a value too close to zero to invert."""


class NearPole(HyperqError):
    """A point lies inside the pole guard of a function."""


class ParseError(HyperqError):
    """Raised by the expression parser; carries position and expectations."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += " (expected: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(detail)


class NotPolynomial(HyperqError):
    """Expression has a reciprocal node where a polynomial was required."""


class NotRational(HyperqError):
    """Expression cannot be put into numerator/denominator form."""


class NotAZero(HyperqError):
    """Vanishing-order query at a point where the function does not vanish."""


class BothZero(HyperqError):
    """Homogeneous pair (0, 0) does not define a projective point."""


class OutsideChart(HyperqError):
    """Chart coordinate requested for a point outside the chart domain."""


class EmptyGrid(HyperqError):
    """A grid with no sample points was supplied."""
