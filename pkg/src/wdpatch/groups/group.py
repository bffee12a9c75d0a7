"""Finite groups given by multiplication tables, and their subgroups."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 256


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group on the elements 0..order-1.

    ``table[a][b]`` is the index of the product a*b.  The table is checked
    for closure, identity, inverses and associativity at construction.
    """

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 name: str | None = None, max_order: int = DEFAULT_MAX_ORDER):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise GroupError("multiplication table must be a non-empty square array")
        n = arr.shape[0]
        if n > max_order:
            raise GroupError(f"group order {n} exceeds the configured bound {max_order}")
        if arr.min() < 0 or arr.max() >= n:
            raise GroupError("table entries out of range")
        target = np.arange(n)
        if not all((np.sort(arr, axis=1) == target).all(axis=1)) or not (np.sort(arr, axis=0) == target[:, None]).all():
            raise GroupError("table is not a Latin square")
        ids = [e for e in range(n) if (arr[e] == target).all() and (arr[:, e] == target).all()]
        if not ids:
            raise GroupError("no identity element")
        # (ab)c == a(bc) for all triples
        left = arr[arr, :]            # left[a, b, c] = (ab)c
        right = arr[:, arr]           # right[a, b, c] = a(bc)
        if not (left == right).all():
            raise GroupError("table is not associative")
        self.order = n
        self.table = tuple(tuple(int(x) for x in row) for row in arr)
        self.identity = ids[0]
        self.inverses = tuple(int(np.nonzero(arr[a] == self.identity)[0][0]) for a in range(n))
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise GroupError("label count does not match order")
        self.name = name or f"G{n}"

    # -- basic operations ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverses[g]]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        out = 1
        for a in range(self.order):
            out = lcm(out, self.element_order(a))
        return out

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(a))

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        seen = set()
        out = []
        for x in range(self.order):
            if x in seen:
                continue
            cls = sorted({self.conj(g, x) for g in range(self.order)})
            seen.update(cls)
            out.append(tuple(cls))
        return tuple(out)

    def class_of(self, x: int) -> tuple[int, ...]:
        for c in self.conjugacy_classes:
            if x in c:
                return c
        raise GroupError("element not in group")  # pragma: no cover

    def whole(self) -> "Subgroup":
        return Subgroup(self, range(self.order), check=False)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, [self.identity], check=False)

    def generate(self, gens: Iterable[int]) -> "Subgroup":
        members = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(self, members, check=False)

    def subgroups(self, max_generators: int = 2) -> list["Subgroup"]:
        """Subgroups generated by at most ``max_generators`` elements."""
        found = {}
        layer = {frozenset([self.identity]): self.trivial_subgroup()}
        found.update(layer)
        for _ in range(max_generators):
            new = {}
            for sub in layer.values():
                for g in range(self.order):
                    if g in sub.member_set:
                        continue
                    h = self.generate(list(sub.members) + [g])
                    key = h.member_set
                    if key not in found and key not in new:
                        new[key] = h
            found.update(new)
            layer = new
        return sorted(found.values(), key=lambda s: (s.order, s.members))

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


class Subgroup:
    """A subgroup of a FiniteGroup, stored as a sorted tuple of members."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int], check: bool = True):
        self.parent = parent
        self.members = tuple(sorted(set(int(m) for m in members)))
        self.member_set = frozenset(self.members)
        if check:
            self._validate()

    def _validate(self):
        G = self.parent
        if not self.members:
            raise GroupError("empty subgroup")
        if any(m < 0 or m >= G.order for m in self.members):
            raise GroupError("subgroup member out of range")
        if G.identity not in self.member_set:
            raise GroupError("subgroup lacks the identity")
        for a in self.members:
            if G.inv(a) not in self.member_set:
                raise GroupError("subgroup not closed under inverses")
            for b in self.members:
                if G.table[a][b] not in self.member_set:
                    raise GroupError("subgroup not closed under multiplication")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, x):
        return x in self.member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent == other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Subgroup(order={self.order}, index={self.index}, members={list(self.members)})"

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def issubset(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.member_set & other.member_set, check=False)

    def product_set(self, other: "Subgroup") -> frozenset:
        t = self.parent.table
        return frozenset(t[a][b] for a in self.members for b in other.members)

    def product_is_whole(self, other: "Subgroup") -> bool:
        return len(self.product_set(other)) == self.parent.order

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(g, x) in self.member_set for g in range(G.order) for x in self.members)

    def is_normal_in(self, other: "Subgroup") -> bool:
        G = self.parent
        return self.issubset(other) and all(G.conj(g, x) in self.member_set for g in other.members for x in self.members)

    def left_coset_reps(self, within: "Subgroup | None" = None) -> list[int]:
        """Representatives t with within = union of t*self, smallest index first."""
        G = self.parent
        pool = within.members if within is not None else range(G.order)
        covered = set()
        reps = []
        for t in pool:
            if t in covered:
                continue
            reps.append(t)
            covered.update(G.table[t][h] for h in self.members)
        return reps

    def prime_quotient(self, within: "Subgroup | None" = None):
        """The prime p if self is normal of prime index p in ``within``, else None."""
        within = within if within is not None else self.parent.whole()
        if not self.is_normal_in(within):
            return None
        idx = within.order // self.order
        if idx < 2 or any(idx % d == 0 for d in range(2, int(idx ** 0.5) + 1)):
            return None
        return idx

    def as_group(self) -> tuple[FiniteGroup, list[int]]:
        """An abstract FiniteGroup isomorphic to self, with the embedding."""
        pos = {m: i for i, m in enumerate(self.members)}
        t = self.parent.table
        table = [[pos[t[a][b]] for b in self.members] for a in self.members]
        labels = [self.parent.labels[m] for m in self.members]
        return FiniteGroup(table, labels=labels), list(self.members)


def as_subgroup(x) -> Subgroup:
    if isinstance(x, Subgroup):
        return x
    if isinstance(x, FiniteGroup):
        return x.whole()
    raise TypeError(f"expected a group or subgroup, got {type(x).__name__}")


def group_from_permutations(gens: Sequence[Sequence[int]], name: str | None = None) -> tuple[FiniteGroup, list[tuple[int, ...]]]:
    """Close a set of permutations under composition.

    The product a*b is the permutation "apply b, then a".  Returns the group
    and the list of permutations indexed like its elements; the identity is 0.
    """
    deg = len(gens[0])
    ident = tuple(range(deg))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                r = tuple(p[g[i]] for i in range(deg))
                if r not in index:
                    index[r] = len(elems)
                    elems.append(r)
                    nxt.append(r)
        frontier = nxt
    n = len(elems)
    table = [[index[tuple(a[b[i]] for i in range(deg))] for b in elems] for a in elems]
    return FiniteGroup(table, name=name), elems
