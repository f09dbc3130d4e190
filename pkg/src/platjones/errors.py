"""Exception hierarchy.

Input problems map to CLI exit code 1, resource caps to exit code 2.
"""


class PlatJonesError(Exception):
    """Base class for all package errors."""


class InputError(PlatJonesError):
    """Base for malformed or out-of-contract user input."""


class DomainError(InputError):
    """Numeric argument outside the valid domain (e.g. q-factorial past k+1)."""


class AdmissibilityError(InputError):
    """A spin triple violates the SU(2)_k fusion rules."""


class ParseError(InputError):
    """Malformed braid JSON."""


class RangeError(InputError):
    """Index or spin out of range."""


class PlatError(InputError):
    """Colors/orientations are not compatible with a plat closure."""


class NotPlatCompatible(PlatError):
    """Vacuum conformal block does not exist for these boundary colors."""


class OddCrossingParity(InputError):
    """Signed inter-component crossing count is odd; diagram is malformed."""


class EmptyBasis(PlatJonesError):
    """No admissible conformal-block labeling exists (dimension 0)."""


class NotFound(PlatJonesError):
    """Label is not a member of the basis."""


class OutOfRange(PlatJonesError):
    """Basis position index out of range."""


class DimensionMismatch(PlatJonesError):
    """Operator/state dimensions are incompatible."""


class WidthError(PlatJonesError):
    """A label value does not fit in its register slot."""


class ResourceError(PlatJonesError):
    """Problem size exceeds the configured cap for the exact path."""
