"""Dunkl-type connections on toric mirror arrangements: root data, flatness, residues,
Hermitian forms of the reflection representation and Schwarz conditions."""

__version__ = "0.1.0"

from .connection import MultiplicityParam  # noqa: E402
from .errors import (DomainViolation, InvalidFamily, InvalidRoot, MirrorlatError,  # noqa: E402
                     SingularForm, SingularPoint, SpecializationDomain, SpectralInconsistency,
                     UnsupportedType)
from .polys import K, KP, ScalarPoly, linform, parse_rational  # noqa: E402
from .rootsystem import build, supported_types  # noqa: E402

__all__ = [
    "__version__", "MultiplicityParam", "ScalarPoly", "K", "KP", "linform", "parse_rational",
    "build", "supported_types", "MirrorlatError", "UnsupportedType", "InvalidRoot",
    "InvalidFamily", "SingularPoint", "SpecializationDomain", "SingularForm", "DomainViolation",
    "SpectralInconsistency",
]
