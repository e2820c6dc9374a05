"""Exception hierarchy shared across the package."""


class MopError(Exception):
    """Base class for every error raised by mopkit."""


class PoleError(MopError, ValueError):
    """A Gamma function or Pochhammer quotient was asked to evaluate at a pole."""


class DenominatorPoleError(PoleError):
    """A hypergeometric denominator vanishes before the series terminates."""


class NonTerminatingError(MopError, ValueError):
    """A hypergeometric series has no non-positive integer numerator parameter."""


class IncompatibleGammaError(MopError, ArithmeticError):
    """Two Gamma-scaled values with different residual Gamma factors were added,
    or a value expected to be rational still carries Gamma factors."""


class ATSystemError(MopError, ValueError):
    """Weight parameters violate the admissibility (AT system) conditions."""


class SingularSystemError(MopError, ArithmeticError):
    """The moment linear system has no unique solution."""


class InvalidInstanceError(MopError, ValueError):
    """Hypergeometric identity instance violates its hypotheses."""
