"""Exception hierarchy for the wdiam package.

All package errors derive from :class:`WdiamError` so callers can catch one
base class.  Validation errors (bad user input) are kept distinct from
numerical failures (a solver not converging) because the CLI maps them to
different exit codes.
"""


class WdiamError(Exception):
    """Base class for all wdiam errors."""


# --- input validation ---

class TooFewQubits(WdiamError):
    """Fewer than three coefficients; the diameter equations need N >= 3."""


class NonFinite(WdiamError):
    """NaN or infinity in the input coefficients."""


class NotNormalizable(WdiamError):
    """Zero norm, or norm too far from 1 without an explicit renormalize flag."""


class NormalizationViolated(WdiamError):
    """A partition's multiplicity-weighted squared amplitudes do not sum to 1."""


class OutOfDomain(WdiamError):
    """Argument outside the validity domain of a closed-form expression."""


class NegativeDiscriminant(OutOfDomain):
    """Discriminant of the two-block radical solution is negative."""


class DegenerateTriangle(WdiamError):
    """Zero-area coefficient triangle where the circumradius branch was requested."""


class InconsistentInput(WdiamError):
    """A diameter solution does not belong to the state it was paired with."""


class WrongRegion(WdiamError):
    """A region-specific solver was invoked on a state outside that region."""


# --- numerical failures ---

class ConvergenceFailure(WdiamError):
    """Root bracketing or iteration cap failed; signals numerical pathology."""


class AmbiguousRoot(ConvergenceFailure):
    """More than one sign change detected where a unique root was expected."""


class DivergedToInfinity(WdiamError):
    """Entanglement diameter diverges: largest coefficient is at the second
    critical value.  The overlap equals the largest coefficient there."""


class NoConvergedStart(WdiamError):
    """Every oracle start hit the sweep cap without meeting the tolerance."""


class BoundaryOptimum(WdiamError):
    """Oracle optimum is a basis product state; stationarity ratios degenerate."""
