"""Matrix representations of finite groups and their characters."""

from __future__ import annotations

import random
from typing import Callable, Mapping, Sequence

from ..exact import Matrix, Scalar
from .group import FiniteGroup, GroupError, Subgroup, as_subgroup

ZERO = Scalar(0)
ONE = Scalar(1)


class RepError(ValueError):
    pass


class Character:
    """Class function on a subgroup, stored as values aligned with its members."""

    __slots__ = ("domain", "values", "_hash")

    def __init__(self, domain, values: Mapping[int, Scalar] | Sequence[Scalar]):
        self.domain = as_subgroup(domain)
        if isinstance(values, Mapping):
            vals = tuple(values[m] if isinstance(values[m], Scalar) else Scalar(values[m]) for m in self.domain.members)
        else:
            vals = tuple(v if isinstance(v, Scalar) else Scalar(v) for v in values)
            if len(vals) != self.domain.order:
                raise RepError("character length does not match the domain")
        self.values = vals
        self._hash = None

    def __call__(self, g: int) -> Scalar:
        return self.values[self.domain.members.index(g)]

    def as_dict(self) -> dict[int, Scalar]:
        return dict(zip(self.domain.members, self.values))

    @property
    def degree(self) -> Scalar:
        return self(self.domain.parent.identity)

    def _same(self, other):
        if not isinstance(other, Character) or other.domain != self.domain:
            raise RepError("characters live on different groups")

    def __add__(self, other):
        self._same(other)
        return Character(self.domain, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same(other)
        return Character(self.domain, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, Character):
            self._same(other)
            return Character(self.domain, [a * b for a, b in zip(self.values, other.values)])
        return Character(self.domain, [a * other for a in self.values])

    __rmul__ = __mul__

    def conj(self) -> "Character":
        return Character(self.domain, [a.conj() for a in self.values])

    def restrict(self, h: Subgroup) -> "Character":
        if not h.issubset(self.domain):
            raise RepError("restriction to a non-subgroup")
        d = self.as_dict()
        return Character(h, {m: d[m] for m in h.members})

    def __eq__(self, other):
        return isinstance(other, Character) and self.domain == other.domain and self.values == other.values

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.domain, self.values))
        return self._hash

    def key(self) -> tuple[str, ...]:
        """Deterministic sort key: the value strings in member order."""
        return tuple(str(v) for v in self.values)

    def __repr__(self):
        return f"Character({list(self.key())})"


class GroupRep:
    """A representation g -> images[g] of a subgroup (or whole group).

    Homomorphism is spot-checked on a deterministic sample of pairs when
    ``check`` is true.
    """

    def __init__(self, domain, images: Mapping[int, Matrix], check: bool = True, notes: dict | None = None,
                 name: str | None = None):
        self.domain = as_subgroup(domain)
        try:
            self.images = {int(g): images[g] for g in self.domain.members}
        except KeyError as exc:
            raise RepError(f"missing image for element {exc}") from None
        dims = {m.shape for m in self.images.values()}
        if len(dims) != 1:
            raise RepError("images have inconsistent shapes")
        (shape,) = dims
        if shape[0] != shape[1]:
            raise RepError("images must be square")
        self.dim = shape[0]
        self.notes = dict(notes or {})
        self.name = name
        self._character = None
        if check:
            self.check_homomorphism()

    @property
    def group(self) -> FiniteGroup:
        return self.domain.parent

    def __call__(self, g: int) -> Matrix:
        return self.images[g]

    def check_homomorphism(self, samples: int = 16, seed: int = 0):
        G = self.group
        e = G.identity
        if self.images[e] != Matrix.identity(self.dim):
            raise RepError("identity does not map to the identity matrix")
        mem = self.domain.members
        rng = random.Random(seed)
        pairs = [(rng.choice(mem), rng.choice(mem)) for _ in range(samples)]
        for a, b in pairs:
            if self.images[a] @ self.images[b] != self.images[G.mul(a, b)]:
                raise RepError(f"not a homomorphism at ({a}, {b})")

    def full_check(self):
        G = self.group
        for a in self.domain.members:
            for b in self.domain.members:
                if self.images[a] @ self.images[b] != self.images[G.mul(a, b)]:
                    raise RepError(f"not a homomorphism at ({a}, {b})")

    @property
    def character(self) -> Character:
        if self._character is None:
            self._character = Character(self.domain, [self.images[g].trace() for g in self.domain.members])
        return self._character

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"GroupRep{label}(dim={self.dim}, domain order={self.domain.order})"

    # -- constructors -------------------------------------------------------

    @classmethod
    def trivial(cls, domain, dim: int = 1) -> "GroupRep":
        domain = as_subgroup(domain)
        ident = Matrix.identity(dim)
        return cls(domain, {g: ident for g in domain.members}, check=False, name="trivial")

    @classmethod
    def from_linear_character(cls, domain, values: Mapping[int, Scalar], name: str | None = None) -> "GroupRep":
        domain = as_subgroup(domain)
        return cls(domain, {g: Matrix([[values[g]]]) for g in domain.members}, name=name)

    @classmethod
    def from_function(cls, domain, f: Callable[[int], Matrix], check: bool = True, name: str | None = None) -> "GroupRep":
        domain = as_subgroup(domain)
        return cls(domain, {g: f(g) for g in domain.members}, check=check, name=name)

    @classmethod
    def regular(cls, group: FiniteGroup) -> "GroupRep":
        n = group.order

        def perm(g):
            return Matrix([[1 if group.mul(g, j) == i else 0 for j in range(n)] for i in range(n)])

        return cls.from_function(group, perm, name="regular")

    # -- structural operations ---------------------------------------------

    def direct_sum(self, *others: "GroupRep") -> "GroupRep":
        reps = (self,) + others
        for r in others:
            if r.domain != self.domain:
                raise RepError("direct sum of representations on different groups")
        return GroupRep(self.domain, {g: Matrix.block_diag([r.images[g] for r in reps]) for g in self.domain.members},
                        check=False)

    def tensor(self, other: "GroupRep") -> "GroupRep":
        if other.domain != self.domain:
            raise RepError("tensor product of representations on different groups")
        return GroupRep(self.domain, {g: self.images[g].kron(other.images[g]) for g in self.domain.members},
                        check=False)

    def dual(self) -> "GroupRep":
        G = self.group
        return GroupRep(self.domain, {g: self.images[G.inv(g)].transpose() for g in self.domain.members}, check=False)

    def twist(self, eta: "GroupRep") -> "GroupRep":
        """Tensor with a 1-dimensional representation defined on a supergroup."""
        if eta.dim != 1:
            raise RepError("twisting needs a 1-dimensional representation")
        if not self.domain.issubset(eta.domain):
            raise RepError("twisting character must be defined on the domain")
        return GroupRep(self.domain, {g: self.images[g] * eta.images[g][0, 0] for g in self.domain.members},
                        check=False)

    def change_basis(self, P: Matrix) -> "GroupRep":
        """g -> P^-1 rho(g) P."""
        Pi = P.inverse()
        return GroupRep(self.domain, {g: Pi @ self.images[g] @ P for g in self.domain.members}, check=False)

    def kernel(self) -> Subgroup:
        ident = Matrix.identity(self.dim)
        return Subgroup(self.group, [g for g in self.domain.members if self.images[g] == ident], check=False)


def direct_sum(reps: Sequence[GroupRep]) -> GroupRep:
    if not reps:
        raise RepError("empty direct sum")
    return reps[0].direct_sum(*reps[1:])
