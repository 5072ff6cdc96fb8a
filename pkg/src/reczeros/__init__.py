"""Exact arithmetic for a two-parameter family of self-reciprocal
polynomials with zeta-ratio coefficients: construction, zero-location
certificates, claim verification, and discriminant analysis.

The composition-friendly entry points are re-exported here; the
submodules keep the full kit (interval arithmetic, Sturm machinery,
serialization, and the ``reczeros`` command-line front end).
"""

from .analysis import AnalysisRecord, analyze, discriminant, mahler_measure
from .certify import (
    ZeroCertificate,
    alpha_enclosure,
    certify_zeros,
    roots_of_unity_zeros,
)
from .claims import ClaimResult, VerificationReport, run_all
from .exactnum import bernoulli, q, zeta_even_rational
from .family import (
    FamilyInstance,
    circle_approximant,
    monic_even_form,
    reciprocal_poly,
    sigma_of,
)
from .interval import Interval
from .polycore import Poly, SturmChain, isolate_real_roots

__version__ = "0.1.0"

__all__ = [
    "AnalysisRecord",
    "ClaimResult",
    "FamilyInstance",
    "Interval",
    "Poly",
    "SturmChain",
    "VerificationReport",
    "ZeroCertificate",
    "alpha_enclosure",
    "analyze",
    "bernoulli",
    "certify_zeros",
    "circle_approximant",
    "discriminant",
    "isolate_real_roots",
    "mahler_measure",
    "monic_even_form",
    "q",
    "reciprocal_poly",
    "roots_of_unity_zeros",
    "run_all",
    "sigma_of",
    "zeta_even_rational",
]
