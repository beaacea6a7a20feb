"""Exception types shared across the package."""


class ContactSchwarzianError(Exception):
    """Base class for package errors."""


class DimensionError(ContactSchwarzianError):
    """Dimension parameter out of range or shapes inconsistent."""


class SingularPointError(ContactSchwarzianError):
    """Evaluation at a pole of a rational expression."""


class DegenerateMapError(ContactSchwarzianError):
    """Conformal factor vanishes or frame matrix singular: not a contactomorphism here."""


class OrderBudgetError(ContactSchwarzianError):
    """A derivative of higher order than the available jet order was requested."""


class NoLocalInverseError(ContactSchwarzianError):
    """Newton iteration for a local inverse failed to converge."""


class WeightError(ContactSchwarzianError):
    """Density weight unsupported for the requested operation."""


class InvalidDifferenceTensorError(ContactSchwarzianError):
    """Candidate difference tensor violates its symmetry or trace constraints."""


class NotContactProjectiveError(ContactSchwarzianError):
    """Fiber polynomial has quartic dependence: no contact projective structure."""
