"""Exception hierarchy shared by the library and the command line front end."""


class FanoError(Exception):
    """Base class for every error raised by :mod:`fanodeg`."""


class InvalidArgument(FanoError, ValueError):
    """Parameters outside the domain of an operation."""


class NegativeDelta(InvalidArgument):
    """The expected dimension is negative, so the degree formula does not apply."""


class DistinctnessViolation(InvalidArgument):
    """Two torus weights coincide.

    ``pair`` holds the 1-based positions of the first colliding pair.
    """

    def __init__(self, pair, value):
        self.pair = pair
        self.value = value
        super().__init__(
            f"weights at positions {pair[0]} and {pair[1]} are both {value}"
        )


class HypothesisViolation(FanoError):
    """``d == 2`` and ``n < 2k + 1`` without an explicit override."""


class InternalError(FanoError, ArithmeticError):
    """A computation produced a value that correct code can never produce."""


class Disagreement(FanoError):
    """Two trials or two methods returned different degrees."""
