"""Patching of representations over families of prime-index subgroups."""

from .family import (
    Demand,
    FamilyError,
    Member,
    PatchFamily,
    check_family,
    compatibility_failures,
    disjoint_members,
    family_from_character,
    galois_invariance_failures,
    raise_demand,
    subgroup_irreducibles,
    uncovered_elements,
)
from .engine import (
    FamilyNotGeneral,
    OrbitLedger,
    PatchAmbiguity,
    PatchCertificate,
    PatchError,
    extension_candidates,
    orbit_ledger,
    patch,
    patch_candidates,
    verify_patch,
)
from .solvable import SolvableTower, TowerError, TowerMember, patch_solvable
from .oracle import compare_with_oracle, oracle_solutions, semisimple_characters
from .arithmetic import (
    SplittingError,
    cm_family_search,
    is_prime,
    is_squarefree,
    legendre,
    quadratic_splitting,
    splitting_by_factorization,
)

__all__ = [name for name in dir() if not name.startswith("_")]
