"""Exact integer, rational and polynomial arithmetic."""

from .finite_fields import (
    factor_degrees,
    factor_mod,
    is_irreducible_mod,
    is_squarefree_mod,
)
from .integers import (
    Factorization,
    Primality,
    factor_integer,
    is_prime,
    is_probable_prime,
    is_square,
    iter_primes,
    prime_product_up_to,
    primes_up_to,
)
from .poly import Poly, content_and_primitive, gcd_zz, primitive_part_zz
from .resultants import discriminant, resultant
from .rings import GF, QQ, ZZ, ExtensionField, PolyRing, PrimeField, field_of_order
from .sturm import INF, sturm_count

__all__ = [
    "ExtensionField",
    "Factorization",
    "GF",
    "INF",
    "Poly",
    "PolyRing",
    "Primality",
    "PrimeField",
    "QQ",
    "ZZ",
    "content_and_primitive",
    "discriminant",
    "factor_degrees",
    "factor_integer",
    "factor_mod",
    "field_of_order",
    "gcd_zz",
    "is_irreducible_mod",
    "is_prime",
    "is_probable_prime",
    "is_square",
    "is_squarefree_mod",
    "iter_primes",
    "prime_product_up_to",
    "primes_up_to",
    "primitive_part_zz",
    "resultant",
    "sturm_count",
]
