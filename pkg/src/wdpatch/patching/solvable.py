"""Patching over solvable members by recursion on prime layers.

A member is a chain G > H_1 > ... > H_h = Gamma_E in which every step is
normal of prime index in the previous one; h is its height. Members sharing
a first step K are patched inside K first, then the results are patched
across the first steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..groups import GroupRep, Subgroup
from ..groups.group import as_subgroup
from .engine import FamilyNotGeneral, PatchAmbiguity, PatchCertificate, patch
from .family import FamilyError, PatchFamily


class TowerError(FamilyError):
    """A chain is not made of prime-cyclic layers, or exceeds the height bound."""


@dataclass
class TowerMember:
    chain: tuple
    rep: GroupRep
    name: str

    @property
    def height(self) -> int:
        return len(self.chain)


class SolvableTower:
    def __init__(self, G, members: Sequence, excluded: Iterable[int] = (), max_height: int | None = None,
                 names: Sequence[str] | None = None):
        self.ambient = as_subgroup(G)
        self.excluded = frozenset(excluded)
        self.members = []
        for k, (chain, rep) in enumerate(members):
            chain = tuple(as_subgroup(h) for h in chain)
            if not chain:
                raise TowerError(f"member {k} has an empty chain")
            prev = self.ambient
            for depth, h in enumerate(chain):
                if h.prime_quotient(within=prev) is None:
                    raise TowerError(f"member {k}: layer {depth} is not normal of prime index in the previous group")
                prev = h
            if rep.domain != chain[-1]:
                raise TowerError(f"member {k}: representation is not defined on the last group of the chain")
            self.members.append(TowerMember(chain, rep, names[k] if names else f"E{k}"))
        if not self.members:
            raise TowerError("a tower needs at least one member")
        if max_height is not None and self.height > max_height:
            raise TowerError(f"height {self.height} exceeds the bound {max_height}")

    @property
    def height(self) -> int:
        return max(m.height for m in self.members)

    def flat_family(self) -> PatchFamily:
        """The height-one family formed by the members themselves."""
        if self.height != 1:
            raise TowerError("only a height-one tower is a plain family")
        return PatchFamily(self.ambient, [(m.chain[0], m.rep) for m in self.members], self.excluded,
                           names=[m.name for m in self.members])


def _name(H: Subgroup) -> str:
    return "<" + ",".join(str(x) for x in H.members) + ">"


def patch_solvable(tower: SolvableTower) -> PatchCertificate:
    if tower.height == 1:
        return patch(tower.flat_family())
    groups: dict = {}
    order = []
    for m in tower.members:
        K = m.chain[0]
        if K.members not in groups:
            groups[K.members] = (K, [], [])
            order.append(K.members)
        if m.height == 1:
            groups[K.members][2].append(m)
        else:
            groups[K.members][1].append(m)
    layer_certs = []
    top_members, top_names = [], []
    for key in order:
        K, deeper, direct = groups[key]
        if deeper:
            sub = SolvableTower(K, [(m.chain[1:], m.rep) for m in deeper], tower.excluded,
                                names=[m.name for m in deeper])
            try:
                cert = patch_solvable(sub)
            except (FamilyNotGeneral, PatchAmbiguity) as exc:
                exc.layer = _name(K)
                raise
            rho_K = cert.rho
            layer_certs.append({"layer": _name(K), "certificate": cert})
            for m in direct:
                if m.rep.character != rho_K.character:
                    raise FamilyError(f"member {m.name} disagrees with the representation patched on {_name(K)}")
        else:
            rho_K = direct[0].rep
            for m in direct[1:]:
                if m.rep.character != rho_K.character:
                    raise FamilyError(f"members on {_name(K)} carry different representations")
        top_members.append((K, rho_K))
        top_names.append(_name(K))
    top = PatchFamily(tower.ambient, top_members, tower.excluded, names=top_names)
    try:
        cert = patch(top)
    except (FamilyNotGeneral, PatchAmbiguity) as exc:
        exc.layer = "top"
        raise
    cert.layers = layer_certs
    cert.log("solvable", height=tower.height, layers=[lc["layer"] for lc in layer_certs])
    return cert
