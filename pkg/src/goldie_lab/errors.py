"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: :class:`InputError` -> 2,
:class:`EquationViolation` -> 3, :class:`DegeneracyError` -> 4.
"""


class GoldieLabError(Exception):
    """Base class for every error raised by the package."""


class InputError(GoldieLabError, ValueError):
    """Arguments outside an operation's domain or malformed input data."""


class EquationViolation(GoldieLabError):
    """Data that should satisfy a functional equation does not."""


class NotANormingSequence(EquationViolation):
    """A sequence fails the discrete Cauchy exponential equation a_mn = a_m a_n."""


class DegeneracyError(GoldieLabError):
    """The input belongs to a degenerate or trivial family."""


class TrivialSolution(DegeneracyError):
    """All samples vanish: the kernel is the trivial solution kappa == 0."""


class DegenerateExponent(DegeneracyError):
    """A norming sequence with exponent k = 0 (a_n == 1)."""


class NoReconstruction(DegeneracyError):
    """A case-1 reduced system has no unique stable-law representative."""


class IllPosedSample(InputError):
    """Samples from which the Goldie constants cannot be recovered."""


class InadmissibleParameters(InputError):
    """Parameters that do not correspond to a genuine stable law."""


class CarrierError(InputError):
    """A point equal to -1/rho, outside the circle group carrier."""


class ConvergenceError(GoldieLabError):
    """A numerical procedure exhausted its budget.

    The best partial result is kept on ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
