"""Families of prime-index subgroups carrying representations, and the
generality diagnostics that the patching engine demands lazily.

Linear disjointness of a member from a field M is read as
Gamma_E * Gamma_M = G, the only translation rule between fields and
subgroups used in this package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..exact import Scalar
from ..groups import (
    Character,
    FiniteGroup,
    GroupRep,
    Subgroup,
    conjugate_character,
    irreducibles,
    restrict,
)
from ..groups.group import as_subgroup


class FamilyError(ValueError):
    """Malformed family or a violated compatibility condition."""


@dataclass
class Member:
    subgroup: Subgroup
    rep: GroupRep
    prime: int
    name: str


@dataclass
class PatchFamily:
    """Members (Gamma_E, rho_E) inside an ambient group.

    The ambient is usually a whole FiniteGroup; the solvable recursion also
    patches inside subgroups. ``excluded`` holds elements exempt from the
    coverage demand.
    """

    ambient: Subgroup
    members: list
    excluded: frozenset = field(default_factory=frozenset)

    def __init__(self, G, members: Sequence, excluded: Iterable[int] = (), names: Sequence[str] | None = None):
        self.ambient = as_subgroup(G)
        self.excluded = frozenset(int(x) for x in excluded)
        self.members = []
        for k, item in enumerate(members):
            sub, rep = item[0], item[1]
            sub = as_subgroup(sub)
            if sub.parent is not self.ambient.parent:
                raise FamilyError(f"member {k} lives in a different group")
            p = sub.prime_quotient(within=self.ambient)
            if p is None:
                raise FamilyError(f"member {k} is not normal of prime index in the ambient group")
            if rep.domain != sub:
                raise FamilyError(f"representation of member {k} is not defined on its subgroup")
            name = names[k] if names else f"E{k}"
            self.members.append(Member(sub, rep, p, name))
        if not self.members:
            raise FamilyError("a family needs at least one member")
        dims = {m.rep.dim for m in self.members}
        if len(dims) != 1:
            raise FamilyError("members carry representations of different dimensions")

    @property
    def group(self) -> FiniteGroup:
        return self.ambient.parent

    @property
    def dim(self) -> int:
        return self.members[0].rep.dim

    def __len__(self):
        return len(self.members)


def subgroup_irreducibles(H: Subgroup) -> list[GroupRep]:
    """Irreducible representations of a subgroup, via its abstract model."""
    H = as_subgroup(H)
    if H.is_whole():
        return irreducibles(H.parent)
    cache = H.parent.__dict__.setdefault("_sub_irreps", {})
    if H.members in cache:
        return list(cache[H.members])
    abstract, emb = H.as_group()
    out = []
    for r in irreducibles(abstract):
        out.append(GroupRep(H, {emb[i]: r.images[i] for i in range(abstract.order)}, check=False))
    out.sort(key=lambda r: (r.dim, r.character.key()))
    cache[H.members] = tuple(out)
    return out


def galois_invariance_failures(fam: PatchFamily, k: int) -> list[int]:
    """Elements sigma of the ambient group with rho_E^sigma not isomorphic to rho_E."""
    m = fam.members[k]
    chi = m.rep.character
    bad = []
    for s in m.subgroup.left_coset_reps(within=fam.ambient):
        if conjugate_character(chi, s) != chi:
            bad.append(s)
    return bad


def compatibility_failures(fam: PatchFamily) -> list[tuple[int, int]]:
    bad = []
    for i, a in enumerate(fam.members):
        for j in range(i + 1, len(fam.members)):
            b = fam.members[j]
            inter = a.subgroup.intersection(b.subgroup)
            if a.rep.character.restrict(inter) != b.rep.character.restrict(inter):
                bad.append((i, j))
    return bad


def uncovered_elements(fam: PatchFamily, include_excluded: bool = False) -> list[int]:
    covered = set()
    for m in fam.members:
        covered.update(m.subgroup.members)
    return [g for g in fam.ambient.members
            if g not in covered and (include_excluded or g not in fam.excluded)]


def disjoint_members(fam: PatchFamily, H: Subgroup, skip: Iterable[int] = ()) -> list[int]:
    """Members E with Gamma_E * H equal to the ambient group."""
    skip = set(skip)
    out = []
    for k, m in enumerate(fam.members):
        if k in skip:
            continue
        if len(m.subgroup.product_set(H)) == fam.ambient.order:
            out.append(k)
    return out


@dataclass
class Demand:
    """A request for a member disjoint from a specific kernel datum."""

    label: str
    kernel: tuple
    witnesses: list
    skip: tuple = ()

    @property
    def satisfied(self) -> bool:
        return bool(self.witnesses)

    def as_dict(self) -> dict:
        return {"label": self.label, "kernel": list(self.kernel), "satisfied": self.satisfied,
                "witnesses": list(self.witnesses)}


def raise_demand(fam: PatchFamily, label: str, H: Subgroup, skip: Iterable[int] = ()) -> Demand:
    skip = tuple(skip)
    return Demand(label, tuple(H.members), disjoint_members(fam, H, skip), skip)


def check_family(fam: PatchFamily, demands: Sequence[Demand] = ()) -> dict:
    """Conditions (a) and (b), element coverage, and any supplied demands."""
    inv = {fam.members[k].name: galois_invariance_failures(fam, k) for k in range(len(fam))}
    comp = compatibility_failures(fam)
    unc = uncovered_elements(fam)
    report = {
        "galois_invariance": {k: not v for k, v in inv.items()},
        "invariance_failures": {k: v for k, v in inv.items() if v},
        "compatibility": not comp,
        "compatibility_failures": [[fam.members[i].name, fam.members[j].name] for i, j in comp],
        "coverage": not unc,
        "uncovered": unc,
        "demands": [d.as_dict() for d in demands],
    }
    report["ok"] = all(not v for v in inv.values()) and not comp
    return report


def family_from_character(G, subgroups: Sequence[Subgroup], chi: Character | GroupRep) -> PatchFamily:
    """Members carrying the restrictions of one representation of G."""
    rep = chi if isinstance(chi, GroupRep) else GroupRep.from_linear_character(chi.domain, chi.as_dict())
    return PatchFamily(G, [(H, restrict(rep, H)) for H in subgroups])


def trivial_character(H: Subgroup) -> Character:
    return Character(H, [Scalar(1)] * H.order)
