"""Exception hierarchy.

Poles and degeneracies are ordinary results of evaluating rational closed
forms at unlucky points, so they get their own classes and carry the
symbolic name of the factor that vanished.
"""


class SVFError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SVFError, ValueError):
    pass


class ParameterError(SVFError, ValueError):
    """Invalid model parameters (e.g. c = 0, wrong list lengths)."""


class UnsupportedRangeError(SVFError, ValueError):
    """Closed form requested outside the range where it is defined (m > n)."""


class PoleError(SVFError, ZeroDivisionError):
    """A closed form would divide by an exactly vanishing factor."""

    def __init__(self, factor, where=None):
        self.factor = factor
        self.where = where
        msg = f"{factor} = 0"
        if where:
            msg += f" in {where}"
        super().__init__(msg)


class DegeneracyError(PoleError):
    """A boundary pairing or normalization vanishes (beta, gamma, T undefined)."""
