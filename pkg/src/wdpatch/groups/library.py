"""Small groups built from permutations, with explicit irreducible representations.

Irreducibles are found by a monomial search: induce every linear character
of every (at most two-generated) subgroup and keep the irreducible results
with new characters, until the squared degrees add up to the group order.
Every group in this module is monomial, so the search is complete here; it
is not a general character-table algorithm.
"""

from __future__ import annotations

from functools import lru_cache

from .group import FiniteGroup, GroupError, Subgroup, group_from_permutations
from .operations import induce, induced_character, inner_product, linear_characters, linear_rep
from .rep import GroupRep


def _cycle(n):
    return [tuple((i + 1) % n for i in range(n))]


def _perm_from_cycles(deg, cycles):
    p = list(range(deg))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


def cyclic(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, labels=[f"g^{k}" for k in range(n)], name=f"Z{n}")


def abelian_product(a: int, b: int) -> FiniteGroup:
    """Z/a x Z/b with element (i, j) at index i*b + j."""
    elems = [(i, j) for i in range(a) for j in range(b)]
    pos = {e: k for k, e in enumerate(elems)}
    table = [[pos[((x[0] + y[0]) % a, (x[1] + y[1]) % b)] for y in elems] for x in elems]
    return FiniteGroup(table, labels=[f"({i},{j})" for i, j in elems], name=f"Z{a}xZ{b}")


def klein_four() -> FiniteGroup:
    g = abelian_product(2, 2)
    g.name = "V4"
    return g


def _perm_group(gens, name):
    G, perms = group_from_permutations(gens, name=name)
    G.labels = tuple("".join(str(x) for x in p) for p in perms)
    G.permutations = perms
    return G


def symmetric3() -> FiniteGroup:
    return _perm_group([(1, 2, 0), (1, 0, 2)], "S3")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of an n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return _perm_group([rot, ref], f"D{n}")


def quaternion8() -> FiniteGroup:
    # regular action of Q8 on {1,i,j,k,-1,-i,-j,-k} (indices 0..7)
    mul = {}
    units = ["1", "i", "j", "k"]
    base = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in units]
    pos = {e: k for k, e in enumerate(elems)}
    for x in elems:
        for y in elems:
            s, u = base[(x[1], y[1])]
            mul[(x, y)] = (x[0] * y[0] * s, u)
    table = [[pos[mul[(x, y)]] for y in elems] for x in elems]
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return FiniteGroup(table, labels=labels, name="Q8")


def alternating4() -> FiniteGroup:
    return _perm_group([(1, 2, 0, 3), (1, 0, 3, 2)], "A4")


def symmetric4() -> FiniteGroup:
    return _perm_group([(1, 2, 3, 0), (1, 0, 2, 3)], "S4")


def dicyclic12() -> FiniteGroup:
    """Z3 semidirect Z4, the dicyclic group of order 12."""
    # elements a^i x^j, i mod 3, j mod 4, with x a x^-1 = a^-1
    elems = [(i, j) for j in range(4) for i in range(3)]
    pos = {e: k for k, e in enumerate(elems)}

    def mul(p, q):
        i1, j1 = p
        i2, j2 = q
        s = -1 if j1 % 2 else 1
        return ((i1 + s * i2) % 3, (j1 + j2) % 4)

    table = [[pos[mul(p, q)] for q in elems] for p in elems]
    return FiniteGroup(table, labels=[f"a^{i}x^{j}" for i, j in elems], name="Dic12")


def s3_times_z2() -> FiniteGroup:
    """The dihedral group of order 12 realized as S3 x Z2."""
    return _perm_group([(1, 2, 0, 3, 4), (1, 0, 2, 3, 4), (0, 1, 2, 4, 3)], "S3xZ2")


LIBRARY = {
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "Z4": lambda: cyclic(4),
    "Z6": lambda: cyclic(6),
    "V4": klein_four,
    "Z4xZ2": lambda: abelian_product(4, 2),
    "S3": symmetric3,
    "D4": lambda: dihedral(4),
    "Q8": quaternion8,
    "A4": alternating4,
    "D6": s3_times_z2,
    "Dic12": dicyclic12,
    "S4": symmetric4,
}


@lru_cache(maxsize=None)
def named_group(name: str) -> FiniteGroup:
    try:
        return LIBRARY[name]()
    except KeyError:
        raise GroupError(f"unknown library group {name!r}") from None


def irreducibles(G: FiniteGroup) -> list[GroupRep]:
    """Irreducible representations of a monomial group, sorted by (dim, character)."""
    cached = getattr(G, "_irreps", None)
    if cached is not None:
        return list(cached)
    found = {}
    total = 0
    for chi in linear_characters(G):
        found[chi] = linear_rep(chi)
        total += 1
    if total < G.order:
        for max_gens in (2, 3):
            for H in G.subgroups(max_generators=max_gens):
                if H.order == G.order:
                    continue
                for lam in linear_characters(H):
                    ind = induced_character(lam, G)
                    if ind in found or inner_product(ind, ind) != 1:
                        continue
                    rep = induce(linear_rep(lam))
                    found[ind] = rep
                    total += rep.dim ** 2
                    if total == G.order:
                        break
                if total == G.order:
                    break
            if total == G.order:
                break
    if total != G.order:
        raise GroupError(f"monomial search found only {total} of {G.order} for {G.name}")
    out = sorted(found.values(), key=lambda r: (r.dim, r.character.key()))
    G._irreps = tuple(out)
    return out
