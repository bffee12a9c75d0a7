"""Induction, restriction, conjugation, intertwiners and extensions."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Sequence

from ..exact import Matrix, NotRepresentable, Scalar
from .group import FiniteGroup, GroupError, Subgroup, as_subgroup
from .rep import Character, GroupRep, RepError

ZERO = Scalar(0)
ONE = Scalar(1)


def _char(x) -> Character:
    return x.character if isinstance(x, GroupRep) else x


def inner_product(chi1, chi2, on=None) -> Scalar:
    """(1/|G|) sum chi1(g) conj(chi2(g))."""
    chi1, chi2 = _char(chi1), _char(chi2)
    if chi1.domain != chi2.domain:
        raise RepError("inner product of characters on different groups")
    if on is not None and as_subgroup(on) != chi1.domain:
        raise RepError("characters are not defined on the requested group")
    acc = ZERO
    for a, b in zip(chi1.values, chi2.values):
        if a.is_zero() or b.is_zero():
            continue
        acc = acc + a * b.conj()
    return acc * Fraction(1, chi1.domain.order)


def multiplicity(chi1, chi2) -> int:
    v = inner_product(chi1, chi2)
    if not v.is_rational() or v.to_fraction().denominator != 1 or v.to_fraction() < 0:
        raise RepError(f"inner product {v} is not a non-negative integer")
    return int(v.to_fraction())


def is_irreducible(r: GroupRep) -> bool:
    return inner_product(r, r) == 1


def isomorphic(a, b) -> bool:
    """Isomorphism of semisimple representations, decided by characters."""
    return _char(a) == _char(b)


def restrict(r: GroupRep, h) -> GroupRep:
    h = as_subgroup(h)
    if h.parent != r.group or not h.issubset(r.domain):
        raise RepError("restriction target is not a subgroup of the domain")
    out = GroupRep(h, {g: r.images[g] for g in h.members}, check=False, notes=r.notes)
    if r._character is not None:
        out._character = r._character.restrict(h)
    return out


def induced_character(chi: Character, G=None) -> Character:
    """Induced character via the coset formula."""
    h = chi.domain
    target = as_subgroup(G) if G is not None else h.parent.whole()
    grp = h.parent
    vals = chi.as_dict()
    reps = h.left_coset_reps(within=target)
    out = {}
    for g in target.members:
        acc = ZERO
        for t in reps:
            x = grp.mul(grp.mul(grp.inv(t), g), t)
            if x in h.member_set:
                acc = acc + vals[x]
        out[g] = acc
    return Character(target, out)


def induce(r: GroupRep, G=None) -> GroupRep:
    """Ind from r's domain to G using left coset representatives."""
    h = r.domain
    target = as_subgroup(G) if G is not None else h.parent.whole()
    if target.parent != h.parent or not h.issubset(target):
        raise RepError("induction source is not a subgroup of the target")
    grp = h.parent
    reps = h.left_coset_reps(within=target)
    k, d = len(reps), r.dim
    zero_block = Matrix.zeros(d)
    images = {}
    for g in target.members:
        blocks = [[zero_block] * k for _ in range(k)]
        for j, tj in enumerate(reps):
            gt = grp.mul(g, tj)
            for i, ti in enumerate(reps):
                x = grp.mul(grp.inv(ti), gt)
                if x in h.member_set:
                    blocks[i][j] = r.images[x]
                    break
        rows = []
        for i in range(k):
            for a in range(d):
                row = []
                for j in range(k):
                    row.extend(blocks[i][j].row(a))
                rows.append(row)
        images[g] = Matrix(rows)
    return GroupRep(target, images, check=False, notes={"induced_from_order": h.order})


def conjugate_rep(r: GroupRep, g: int) -> GroupRep:
    """The representation x -> r(g^-1 x g) on a normal subgroup."""
    h = r.domain
    grp = h.parent
    ginv = grp.inv(g)
    for x in h.members:
        if grp.conj(ginv, x) not in h.member_set:
            raise RepError("conjugation needs a normal subgroup (or an element normalizing it)")
    return GroupRep(h, {x: r.images[grp.conj(ginv, x)] for x in h.members}, check=False)


def conjugate_character(chi: Character, g: int) -> Character:
    h = chi.domain
    grp = h.parent
    ginv = grp.inv(g)
    vals = chi.as_dict()
    return Character(h, {x: vals[grp.conj(ginv, x)] for x in h.members})


def intertwiner(a: GroupRep, b: GroupRep, seed: int = 0, attempts: int = 64):
    """Invertible A with A a(g) = b(g) A for all g, or None when a and b differ."""
    if a.domain != b.domain or a.dim != b.dim:
        raise RepError("intertwiner needs representations of the same group and dimension")
    if a.character != b.character:
        return None
    d = a.dim
    order = a.domain.order
    inv = a.group.inv
    for s in range(seed, seed + attempts):
        rng = random.Random(s)
        X = Matrix([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)])
        acc = Matrix.zeros(d)
        for g in a.domain.members:
            acc = acc + b.images[g] @ X @ a.images[inv(g)]
        A = acc * Fraction(1, order)
        if A.is_invertible():
            return A
    raise RepError("averaging failed to produce an invertible intertwiner")  # pragma: no cover


def linear_characters(domain) -> list[Character]:
    """All 1-dimensional characters, by extending assignments on generators."""
    h = as_subgroup(domain)
    grp = h.parent
    # greedy generating set
    gens = []
    span = grp.generate([]).member_set
    for x in sorted(h.members, key=lambda m: (-grp.element_order(m), m)):
        if x not in span:
            gens.append(x)
            span = grp.generate(gens).member_set
        if len(span) == h.order:
            break
    orders = [grp.element_order(g) for g in gens]
    found = []
    seen = set()
    for ks in itertools.product(*[range(o) for o in orders]):
        ok = True
        frontier = [grp.identity]
        # values stored as Fraction of a full turn
        turns = {grp.identity: Fraction(0)}
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, o, k in zip(gens, orders, ks):
                    y = grp.mul(x, g)
                    t = (turns[x] + Fraction(k, o)) % 1
                    if y in turns:
                        if turns[y] != t:
                            ok = False
                            break
                    else:
                        turns[y] = t
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if not ok:
            continue
        # full multiplicativity check
        if any(turns[grp.mul(x, y)] != (turns[x] + turns[y]) % 1 for x in h.members for y in gens):
            continue
        key = tuple(turns[m] for m in h.members)
        if key in seen:
            continue
        seen.add(key)
        found.append(Character(h, {m: Scalar.zeta(t.denominator, t.numerator) for m, t in turns.items()}))
    found.sort(key=lambda c: (c != Character(h, [ONE] * h.order), c.key()))
    return found


def linear_rep(chi: Character, name: str | None = None) -> GroupRep:
    return GroupRep.from_linear_character(chi.domain, chi.as_dict(), name=name)


def quotient_characters(base: Subgroup, G=None) -> list[GroupRep]:
    """Characters eta of G trivial on a normal subgroup of prime index."""
    target = as_subgroup(G) if G is not None else base.parent.whole()
    out = []
    for chi in linear_characters(target):
        if all(chi(x) == 1 for x in base.members):
            out.append(linear_rep(chi))
    return out


def _principal_root(z: Scalar, k: int) -> Scalar:
    """A k-th root of a root of unity z."""
    dk = z.as_root_of_unity()
    if dk is None:
        raise NotRepresentable(f"{z} is not a root of unity")
    d, e = dk
    return Scalar.zeta(d * k, e)


def _kth_root(x: Scalar, k: int) -> Scalar:
    """A k-th root of x in the tower, for rationals and monomials."""
    if k == 1:
        return x
    if x.is_rational():
        f = x.to_fraction()
        sign = ONE
        if f < 0:
            sign = Scalar.zeta(2 * k)
            f = -f
        num = round(f.numerator ** (1.0 / k))
        den = round(f.denominator ** (1.0 / k))
        for a in (num - 1, num, num + 1):
            for b in (den - 1, den, den + 1):
                if a > 0 and b > 0 and Fraction(a, b) ** k == f:
                    return sign * Fraction(a, b)
        if k == 2:
            return sign * Scalar.sqrt_rational(f)
        raise NotRepresentable(f"no rational {k}-th root of {f}")
    red = x.reduced()
    nz = [(i, c) for i, c in enumerate(red.c) if c]
    if len(nz) == 1:
        i, c = nz[0]
        return _kth_root(Scalar(c), k) * Scalar.zeta(red.n * k, i)
    if k == 2:
        return x.sqrt()
    raise NotRepresentable(f"cannot extract a {k}-th root of {x}")


def extend_invariant_irrep(tau: GroupRep, G=None) -> GroupRep:
    """Extend an irreducible G-invariant rep of a prime-index normal subgroup.

    With sigma a generator of the quotient, an intertwiner A between tau and
    x -> tau(sigma x sigma^-1) is rescaled to B = mu*A so that B^q0 equals
    tau(sigma^q0); then sigma^e h maps to B^e tau(h).  The choice of sigma
    and mu is recorded in ``notes``.
    """
    h = tau.domain
    target = as_subgroup(G) if G is not None else h.parent.whole()
    grp = h.parent
    q0 = h.prime_quotient(within=target)
    if q0 is None:
        raise RepError("subgroup is not normal of prime index")
    if not is_irreducible(tau):
        raise RepError("extension needs an irreducible representation")
    sigma = next(g for g in target.members if g not in h.member_set)
    # tau' (x) = tau(sigma x sigma^-1)
    tau_s = GroupRep(h, {x: tau.images[grp.conj(sigma, x)] for x in h.members}, check=False)
    if tau_s.character != tau.character:
        raise RepError("representation is not invariant under the quotient")
    s_q = grp.power(sigma, q0)
    T = tau.images[s_q]
    d = tau.dim
    if d == 1:
        A = Matrix.identity(1)
        mu = _principal_root(T[0, 0], q0)
    else:
        A = intertwiner(tau, tau_s)
        Aq = A ** q0
        c = (Aq @ T.inverse())[0, 0]
        if math.gcd(d, q0) == 1:
            # a q0 + b d = 1 gives mu = c^-a (z / det A)^b with z^q0 = det T
            g_, a, b = _bezout(q0, d)
            z = _principal_root(T.det(), q0)
            mu = c ** (-a) * (z / A.det()) ** b
        else:
            mu = _kth_root(c.inverse(), q0)
    B = A * mu
    if B ** q0 != T:
        raise RepError("normalization of the intertwiner failed")  # pragma: no cover
    images = {}
    Bp = Matrix.identity(d)
    powers = [Bp]
    for _ in range(1, q0):
        powers.append(powers[-1] @ B)
    for e in range(q0):
        se = grp.power(sigma, e)
        for x in h.members:
            images[grp.mul(se, x)] = powers[e] @ tau.images[x]
    notes = dict(tau.notes)
    notes.update({"sigma": sigma, "mu": str(mu), "q0": q0})
    out = GroupRep(target, images, check=True, notes=notes)
    return out


def _bezout(a: int, b: int):
    """(g, x, y) with a x + b y = g."""
    if b == 0:
        return a, 1, 0
    g, x, y = _bezout(b, a % b)
    return g, y, x - (a // b) * y


def all_extensions(tau: GroupRep, G=None) -> list[GroupRep]:
    """The q0 twists of one extension by the characters of the quotient."""
    base = extend_invariant_irrep(tau, G)
    return [base.twist(eta) for eta in quotient_characters(tau.domain, base.domain)]


def decompose(r, constituents: Sequence) -> list[int]:
    """Multiplicities of the listed irreducibles; raises if they do not span."""
    chi = _char(r)
    mults = [multiplicity(chi, _char(c)) for c in constituents]
    total = None
    for m, c in zip(mults, constituents):
        term = _char(c) * m
        total = term if total is None else total + term
    if total is None or total != chi:
        raise RepError("character is not a combination of the listed constituents")
    return mults


def frobenius_schur(r) -> Scalar:
    chi = _char(r)
    grp = chi.domain.parent
    vals = chi.as_dict()
    acc = ZERO
    for g in chi.domain.members:
        acc = acc + vals[grp.mul(g, g)]
    return acc * Fraction(1, chi.domain.order)


def bilinear_form_type(r: GroupRep) -> str:
    """'orthogonal', 'symplectic' or 'none' for an irreducible representation."""
    if not is_irreducible(r):
        raise RepError("bilinear form type needs an irreducible representation")
    ind = frobenius_schur(r)
    if ind == 1:
        return "orthogonal"
    if ind == -1:
        return "symplectic"
    return "none"


def prime_index_normal_subgroups(G: FiniteGroup) -> list[tuple[Subgroup, int]]:
    """Normal subgroups of prime index, as kernels of prime-order characters."""
    out = {}
    for chi in linear_characters(G):
        kern = [g for g in range(G.order) if chi(g) == 1]
        idx = G.order // len(kern)
        if idx > 1 and all(idx % p for p in range(2, int(idx ** 0.5) + 1)):
            sub = Subgroup(G, kern, check=False)
            out[sub.members] = (sub, idx)
    return [out[k] for k in sorted(out, key=lambda m: (len(m), m), reverse=True)]
