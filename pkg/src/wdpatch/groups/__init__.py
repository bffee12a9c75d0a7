"""Finite groups, representations, characters and the standard operations on them."""

from .group import FiniteGroup, GroupError, Subgroup, as_subgroup, group_from_permutations
from .rep import Character, GroupRep, RepError, direct_sum
from .operations import (
    all_extensions,
    bilinear_form_type,
    conjugate_character,
    conjugate_rep,
    decompose,
    extend_invariant_irrep,
    frobenius_schur,
    induce,
    induced_character,
    inner_product,
    intertwiner,
    is_irreducible,
    isomorphic,
    linear_characters,
    linear_rep,
    multiplicity,
    prime_index_normal_subgroups,
    quotient_characters,
    restrict,
)
from .library import LIBRARY, irreducibles, named_group

__all__ = [name for name in dir() if not name.startswith("_")]
