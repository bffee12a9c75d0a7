"""Brute-force cross-check: every semisimple representation of the ambient
group assembled from a supplied irreducible list, filtered by restriction."""

from __future__ import annotations

import itertools
from typing import Sequence

from ..groups import Character, GroupRep
from .family import PatchFamily, subgroup_irreducibles


def semisimple_characters(irreps: Sequence[GroupRep], dim: int) -> list[tuple[Character, tuple]]:
    """All characters of dimension dim built from irreps, with multiplicity vectors."""
    dims = [r.dim for r in irreps]
    out = []

    def rec(i, left, acc):
        if left == 0:
            out.append(tuple(acc + [0] * (len(irreps) - i)))
            return
        if i == len(irreps):
            return
        for m in range(left // dims[i], -1, -1):
            rec(i + 1, left - m * dims[i], acc + [m])

    rec(0, dim, [])
    res = []
    for mults in out:
        chi = None
        for r, m in zip(irreps, mults):
            if m:
                term = r.character * m
                chi = term if chi is None else chi + term
        res.append((chi, mults))
    return res


def oracle_solutions(fam: PatchFamily, irreps: Sequence[GroupRep] | None = None) -> list[Character]:
    """Characters of all valid extensions, sorted by their string key."""
    if irreps is None:
        irreps = subgroup_irreducibles(fam.ambient)
    found = []
    for chi, _ in semisimple_characters(irreps, fam.dim):
        if all(chi.restrict(m.subgroup) == m.rep.character for m in fam.members):
            found.append(chi)
    return sorted(set(found), key=lambda c: c.key())


def compare_with_oracle(fam: PatchFamily, irreps: Sequence[GroupRep] | None = None) -> dict:
    from .engine import patch_candidates

    engine = sorted({r.character for r in patch_candidates(fam)}, key=lambda c: c.key())
    oracle = oracle_solutions(fam, irreps)
    return {
        "engine": [list(c.key()) for c in engine],
        "oracle": [list(c.key()) for c in oracle],
        "agree": engine == oracle,
        "unique": len(oracle) == 1,
    }


def count_combinations(n_irreps: int, dim: int) -> int:
    return sum(1 for _ in itertools.combinations_with_replacement(range(n_irreps), dim))
