"""Exception types raised by mirrorlat."""


class MirrorlatError(Exception):
    """Base class for all library errors."""


class UnsupportedType(MirrorlatError, ValueError):
    pass


class InvalidRoot(MirrorlatError, ValueError):
    pass


class InvalidFamily(MirrorlatError, ValueError):
    pass


class SingularPoint(MirrorlatError, ValueError):
    """The evaluation point lies on (or too close to) a mirror e^alpha = 1."""


class SpecializationDomain(MirrorlatError, ValueError):
    """The multiplicity parameter is outside the restricted region K'."""


class SingularForm(MirrorlatError, ValueError):
    pass


class DomainViolation(MirrorlatError, ValueError):
    pass


class SpectralInconsistency(MirrorlatError, ArithmeticError):
    """Sampled eigenvalues are not explained by linear forms in (k, k')."""
