"""Permutation groups: stabilizer chains, backtrack searches, small abstract groups."""

from .abstract import AbstractGroup, Quotient, is_isomorphic, quotient, verify_isomorphism
from .catalog import CATALOG, GroupSpec, catalog_names, named_group, parse_group_spec
from .chain import PermGroup, StabChain, alternating_group, symmetric_group
from .nq import NQHit, find_normalizer_quotient, special_case_An_minus_1
from .perm import format_perm, format_perms, parse_cycles
from .search import (
    are_conjugate,
    conjugating_element,
    normalizer,
    normalizer_exhaustive,
    subgroups_up_to_conjugacy,
)

__all__ = [
    "AbstractGroup",
    "CATALOG",
    "GroupSpec",
    "NQHit",
    "PermGroup",
    "Quotient",
    "StabChain",
    "alternating_group",
    "are_conjugate",
    "catalog_names",
    "conjugating_element",
    "find_normalizer_quotient",
    "format_perm",
    "format_perms",
    "is_isomorphic",
    "named_group",
    "normalizer",
    "normalizer_exhaustive",
    "parse_cycles",
    "parse_group_spec",
    "quotient",
    "special_case_An_minus_1",
    "subgroups_up_to_conjugacy",
    "symmetric_group",
    "verify_isomorphism",
]
