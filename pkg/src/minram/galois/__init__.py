"""Irreducibility over Q, S_n / A_n certificates and ramification reports."""

from .certify import (
    CERTIFIED_SN,
    CERTIFIED_SUBSET_AN,
    EVIDENCE_ONLY,
    NOT_SN,
    GaloisCertificate,
    galois_certify,
)
from .ramification import (
    RAMIFIED,
    UNDECIDED,
    UNRAMIFIED,
    InfiniteStatus,
    RamificationReport,
    infinite_place_status,
    ramified_primes,
    transposition_inertia_check,
)
from .zassenhaus import (
    IrreducibilityCertificate,
    QFactorization,
    factor_over_Z,
    irreducible_over_Q,
)

__all__ = [
    "CERTIFIED_SN",
    "CERTIFIED_SUBSET_AN",
    "EVIDENCE_ONLY",
    "GaloisCertificate",
    "InfiniteStatus",
    "IrreducibilityCertificate",
    "NOT_SN",
    "QFactorization",
    "RAMIFIED",
    "RamificationReport",
    "UNDECIDED",
    "UNRAMIFIED",
    "factor_over_Z",
    "galois_certify",
    "infinite_place_status",
    "irreducible_over_Q",
    "ramified_primes",
    "transposition_inertia_check",
]
