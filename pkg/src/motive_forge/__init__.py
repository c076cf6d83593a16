"""Exact motivic decompositions and Grothendieck-ring classes.

Flag varieties, cellular fibrations, orbit closures of wonderful
compactifications and G-bundles, all reduced to integer combinatorics of
Weyl groups.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AdmissibilityError,
    ConfigurationError,
    InvariantError,
    MotiveForgeError,
    PurityError,
    SizeGuardError,
)
from .rootsys import (  # noqa: E402
    CartanType,
    ParabolicSubset,
    RootSystem,
    WeylElement,
    build_root_system,
    enumerate_weyl,
    longest_element,
    weyl_poincare,
)
from .tate import L, LPolynomial, TateSum  # noqa: E402

__all__ = [
    "AdmissibilityError",
    "CartanType",
    "ConfigurationError",
    "InvariantError",
    "L",
    "LPolynomial",
    "MotiveForgeError",
    "ParabolicSubset",
    "PurityError",
    "RootSystem",
    "SizeGuardError",
    "TateSum",
    "WeylElement",
    "build_root_system",
    "enumerate_weyl",
    "longest_element",
    "weyl_poincare",
]
