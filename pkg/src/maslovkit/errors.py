"""Exception hierarchy shared by all maslovkit modules.

Every error raised on a bad input derives from :class:`MaslovkitError`, so
callers (notably the CLI) can map failures to structured error objects.
"""


class MaslovkitError(Exception):
    """Base class for all library errors."""

    code = "error"


class RingMismatch(MaslovkitError):
    """Operands belong to different coefficient rings."""

    code = "ring-mismatch"


class ShapeError(MaslovkitError):
    """Matrix dimensions are inconsistent with the requested operation."""

    code = "shape-error"


class DivisionByZero(MaslovkitError):
    """Inversion or division by the zero element."""

    code = "division-by-zero"


class DomainError(MaslovkitError):
    """Input is outside the mathematical domain of the operation."""

    code = "domain-error"


class UnsupportedRing(MaslovkitError):
    """The operation is only implemented for a smaller class of rings."""

    code = "unsupported-ring"


class NotAUnit(MaslovkitError):
    """A matrix or ring element expected to be invertible is not."""

    code = "not-a-unit"


class FormError(MaslovkitError):
    """A matrix expected to be a (+/-)hermitian form is not one."""

    code = "form-error"


class DegenerateForm(MaslovkitError):
    """A hermitian form expected to be nondegenerate is singular."""

    code = "degenerate-form"


class NotALoop(MaslovkitError):
    """A path of Lagrangians does not close up at the base point."""

    code = "not-a-loop"


class DegenerateInput(MaslovkitError):
    """Numerically degenerate real input (repeated roots, tiny pivots)."""

    code = "degenerate-input"


class EndpointRoot(MaslovkitError):
    """A real polynomial vanishes at an endpoint of the loop parameter."""

    code = "endpoint-root"


class InternalInvariantViolation(MaslovkitError):
    """An internal consistency check failed; indicates invalid upstream data."""

    code = "internal-invariant-violation"
