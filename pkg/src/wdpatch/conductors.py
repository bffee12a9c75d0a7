"""Artin and Swan conductor exponents from a user-supplied ramification
filtration, and the conductor/depth relation for supercuspidals of GL(n)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groups import GroupRep, Subgroup, inner_product, restrict
from .groups.group import as_subgroup


class ConductorError(ValueError):
    pass


@dataclass(frozen=True)
class RamificationFiltration:
    """Descending chain G_0 >= G_1 >= ... >= G_m = 1 inside one finite group.

    genuine marks a chain that really comes from a local field, in which case
    conductors are asserted to be integers.
    """

    groups: tuple
    genuine: bool = False

    def __init__(self, groups: Sequence, genuine: bool = False):
        subs = tuple(as_subgroup(g) for g in groups)
        if not subs:
            raise ConductorError("empty filtration")
        parent = subs[0].parent
        for g in subs:
            if g.parent is not parent:
                raise ConductorError("filtration groups live in different groups")
        for a, b in zip(subs, subs[1:]):
            if not b.issubset(a):
                raise ConductorError("filtration is not descending")
        if subs[-1].order != 1:
            subs = subs + (parent.trivial_subgroup(),)
        object.__setattr__(self, "groups", subs)
        object.__setattr__(self, "genuine", bool(genuine))

    @property
    def top(self) -> Subgroup:
        return self.groups[0]

    def indices(self) -> list[int]:
        return [self.top.order // g.order for g in self.groups]


def _invariant_dim(r: GroupRep, h: Subgroup) -> int:
    chi = restrict(r, h).character
    return int(inner_product(chi, _trivial_char(h)).to_fraction())


def _trivial_char(h):
    from .groups import Character
    from .exact import Scalar

    return Character(h, [Scalar(1)] * h.order)


def _check_domain(r: GroupRep, filt: RamificationFiltration):
    dom = r.domain
    if dom.parent is not filt.top.parent:
        raise ConductorError("filtration and representation live in different groups")
    if not filt.top.issubset(dom):
        raise ConductorError("filtration is not inside the domain of the representation")


def _terms(r: GroupRep, filt: RamificationFiltration) -> list[Fraction]:
    _check_domain(r, filt)
    n = r.dim
    top = filt.top.order
    out = []
    for g in filt.groups:
        codim = n - _invariant_dim(r, g)
        out.append(Fraction(codim * g.order, top))
    return out


def _finish(value: Fraction, filt: RamificationFiltration) -> Fraction:
    if filt.genuine and value.denominator != 1:
        raise ConductorError(f"non-integral conductor {value} for a genuine filtration")
    return value


def artin_conductor(r: GroupRep, filt: RamificationFiltration) -> Fraction:
    return _finish(sum(_terms(r, filt), Fraction(0)), filt)


def swan_conductor(r: GroupRep, filt: RamificationFiltration) -> Fraction:
    return _finish(sum(_terms(r, filt)[1:], Fraction(0)), filt)


def invariant_codim(r: GroupRep, filt: RamificationFiltration) -> int:
    return r.dim - _invariant_dim(r, filt.top)


def is_integral(r: GroupRep, filt: RamificationFiltration) -> bool:
    return artin_conductor(r, filt).denominator == 1


def depth_from_conductor(f, n: int) -> Fraction:
    f = Fraction(f)
    if n < 1:
        raise ConductorError("dimension must be positive")
    if f < n:
        raise ConductorError(f"conductor {f} is below the dimension {n}")
    return (f - n) / n


@dataclass(frozen=True)
class DepthDatum:
    conductor_exponent: Fraction
    dimension: int
    depth: Fraction


def swan_depth_identity(r: GroupRep, filt: RamificationFiltration) -> dict:
    """Check swan = n * depth for a representation without inertia invariants."""
    if _invariant_dim(r, filt.top) != 0:
        raise ConductorError("representation has nonzero invariants under the full inertia quotient")
    n = r.dim
    f = artin_conductor(r, filt)
    swan = swan_conductor(r, filt)
    depth = depth_from_conductor(f, n)
    return {
        "artin": f,
        "swan": swan,
        "dimension": n,
        "swan_from_artin": f - n,
        "depth": swan / n,
        "depth_from_conductor": depth,
        "consistent": swan == n * depth and swan == f - n,
        "datum": DepthDatum(f, n, depth),
    }
