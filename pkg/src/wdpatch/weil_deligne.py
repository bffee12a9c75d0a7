"""Weil-Deligne pairs over a finite model of the local Weil group.

The Weil group is modeled as <Frob> acting on a finite inertia quotient.
Frobenius enters only through its matrix F, so a pair is (F, r, N) with
r a representation of the inertia quotient and N nilpotent, subject to

    F r(s) F^-1 = r(phi(s)),   r(s) N = N r(s),   N F = q F N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import Matrix, NotNilpotent, Polynomial, Scalar, commutant_basis, jordan_chains
from .exact.matrix import extend_basis, span_rank
from .exact.scalar import totient
from .groups import FiniteGroup, GroupRep, Subgroup, as_subgroup, restrict
from .groups.library import cyclic


class WDError(ValueError):
    pass


class WeightError(WDError):
    """Frobenius eigenvalues are not of the form (root of unity) * q^(k/2)."""


def _frac(q) -> Fraction:
    q = q.to_fraction() if isinstance(q, Scalar) else Fraction(q)
    if q <= 0:
        raise WDError("residue cardinality must be positive")
    return q


def q_half_power(q, k: int) -> Scalar:
    """q^(k/2) as an exact scalar."""
    q = _frac(q)
    if k % 2 == 0:
        return Scalar(q ** (k // 2))
    return Scalar(q ** ((k - 1) // 2)) * Scalar.sqrt_rational(q)


class WeilModel:
    """Frobenius acting by a permutation automorphism on a finite inertia group."""

    def __init__(self, inertia, frobenius_action: Sequence[int] | None = None, q=2, tame_generator: int | None = None):
        self.inertia = as_subgroup(inertia)
        G = self.inertia.parent
        if frobenius_action is None:
            frobenius_action = list(range(G.order))
        act = [int(x) for x in frobenius_action]
        if sorted(act) != list(range(G.order)):
            raise WDError("Frobenius action is not a permutation of the group elements")
        for a in range(G.order):
            for b in range(G.order):
                if act[G.mul(a, b)] != G.mul(act[a], act[b]):
                    raise WDError("Frobenius action is not an automorphism")
        if {act[x] for x in self.inertia.members} != self.inertia.member_set:
            raise WDError("Frobenius action does not preserve the inertia subgroup")
        self.frobenius_action = tuple(act)
        self.q = _frac(q)
        if tame_generator is not None and tame_generator not in self.inertia.member_set:
            raise WDError("tame generator is not an inertia element")
        self.tame_generator = tame_generator

    @classmethod
    def unramified(cls, q) -> "WeilModel":
        return cls(cyclic(1), None, q)

    @property
    def group(self) -> FiniteGroup:
        return self.inertia.parent

    def frobenius_power_action(self, k: int) -> tuple[int, ...]:
        act = list(range(self.group.order))
        for _ in range(k):
            act = [self.frobenius_action[a] for a in act]
        return tuple(act)

    def __repr__(self):
        return f"WeilModel(inertia order={self.inertia.order}, q={self.q})"


class WDPair:
    """A Weil-Deligne pair (r, N) on a WeilModel, validated on construction."""

    def __init__(self, model: WeilModel, frobenius: Matrix, inertia: GroupRep | None = None, N: Matrix | None = None,
                 check: bool = True):
        self.model = model
        self.frobenius = frobenius
        d = frobenius.rows
        self.dim = d
        if inertia is None:
            inertia = GroupRep.trivial(model.inertia, d)
        if inertia.domain != model.inertia:
            raise WDError("inertia representation is not defined on the model's inertia group")
        self.inertia = inertia
        self.N = N if N is not None else Matrix.zeros(d)
        if check:
            self.validate()

    @property
    def q(self) -> Fraction:
        return self.model.q

    def validate(self):
        F, N, d = self.frobenius, self.N, self.dim
        if F.shape != (d, d) or N.shape != (d, d) or self.inertia.dim != d:
            raise WDError("dimension mismatch in Weil-Deligne pair")
        if not F.is_invertible():
            raise WDError("Frobenius image must be invertible")
        if not N.is_nilpotent():
            raise NotNilpotent("monodromy operator is not nilpotent")
        if N @ F != F @ N * self.q:
            raise WDError("N F = q F N fails")
        Finv = F.inverse()
        act = self.model.frobenius_action
        for s in self.model.inertia.members:
            r = self.inertia(s)
            if F @ r @ Finv != self.inertia(act[s]):
                raise WDError(f"Frobenius compatibility fails at inertia element {s}")
            if r @ N != N @ r:
                raise WDError(f"inertia element {s} does not commute with N")

    def with_frobenius(self, F: Matrix) -> "WDPair":
        return WDPair(self.model, F, self.inertia, self.N)

    def twist(self, alpha) -> "WDPair":
        """Twist by the unramified character Frob -> alpha."""
        return WDPair(self.model, self.frobenius * alpha, self.inertia, self.N)

    def direct_sum(self, other: "WDPair") -> "WDPair":
        if other.model is not self.model:
            raise WDError("direct sum needs a common Weil model")
        return WDPair(self.model, Matrix.block_diag([self.frobenius, other.frobenius]),
                      self.inertia.direct_sum(other.inertia), Matrix.block_diag([self.N, other.N]))

    def conjugate(self, g: Matrix) -> "WDPair":
        """The pair transported by g: X -> g X g^-1."""
        gi = g.inverse()
        rho = GroupRep(self.inertia.domain, {s: g @ m @ gi for s, m in self.inertia.images.items()}, check=False)
        return WDPair(self.model, g @ self.frobenius @ gi, rho, g @ self.N @ gi)

    def __eq__(self, other):
        return (isinstance(other, WDPair) and self.model is other.model and self.frobenius == other.frobenius
                and self.N == other.N and self.inertia.images == other.inertia.images)

    def __repr__(self):
        return f"WDPair(dim={self.dim}, q={self.q}, N rank={self.N.rank()})"


@dataclass
class SL2Parameter:
    """Pieces (phi_i, d_i): a Weil-group representation phi_i (N = 0) tensored with S_{d_i}."""

    pieces: list = field(default_factory=list)

    def __post_init__(self):
        if not self.pieces:
            raise WDError("an SL(2) parameter needs at least one piece")
        models = {id(p.model) for p, _ in self.pieces}
        if len(models) != 1:
            raise WDError("all pieces must share one Weil model")
        for p, d in self.pieces:
            if not isinstance(d, int) or d < 1:
                raise WDError(f"malformed block size {d!r}")
            if not p.N.is_zero():
                raise WDError("Weil part must have N = 0")

    @property
    def model(self) -> WeilModel:
        return self.pieces[0][0].model

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.pieces)

    @property
    def dim(self) -> int:
        return sum(p.dim * d for p, d in self.pieces)

    @classmethod
    def unramified(cls, alphas: Sequence, partition: Sequence[int], q) -> "SL2Parameter":
        """Unramified characters Frob -> alpha_i paired with blocks of the given sizes."""
        if len(alphas) != len(partition):
            raise WDError("one character per block is required")
        for d in partition:
            if not isinstance(d, int) or d < 1:
                raise WDError(f"malformed partition {tuple(partition)!r}")
        model = WeilModel.unramified(q)
        return cls([(WDPair(model, Matrix([[a]])), int(d)) for a, d in zip(alphas, partition)])


def sl2_weights(q, d: int) -> Matrix:
    """diag(q^-(d-1)/2, ..., q^(d-1)/2)."""
    return Matrix.diag([q_half_power(q, -(d - 1) + 2 * i) for i in range(d)])


def raising_operator(d: int) -> Matrix:
    return Matrix([[1 if j == i + 1 else 0 for j in range(d)] for i in range(d)])


def wd_from_parameter(phi: SL2Parameter) -> WDPair:
    """Weil-Deligne pair attached to sum phi_i (x) S_{d_i}.

    Frobenius acts on S_d through the diagonal torus element at |Frob| = 1/q,
    N is the raising operator of each block.
    """
    model = phi.model
    q = model.q
    Fs, Ns, reps = [], [], []
    for piece, d in phi.pieces:
        Id = Matrix.identity(d)
        Fs.append(piece.frobenius.kron(sl2_weights(q, d)))
        Ns.append(Matrix.identity(piece.dim).kron(raising_operator(d)))
        reps.append(GroupRep(model.inertia, {s: m.kron(Id) for s, m in piece.inertia.images.items()}, check=False))
    rho = reps[0].direct_sum(*reps[1:]) if len(reps) > 1 else reps[0]
    return WDPair(model, Matrix.block_diag(Fs), rho, Matrix.block_diag(Ns))


# ---------------------------------------------------------------------------
# Frobenius semisimplification


def semisimple_part(F: Matrix, max_iter: int = 64) -> Matrix:
    """Semisimple part of the Jordan decomposition, by Newton iteration on the squarefree char poly."""
    g = F.char_poly().squarefree_part()
    dg = g.derivative()
    S = F
    for _ in range(max_iter):
        val = g(S)
        if val.is_zero():
            return S
        S = S - val @ dg(S).inverse()
    raise WDError("semisimplification did not converge")  # pragma: no cover


def frobenius_semisimplify(w: WDPair) -> WDPair:
    # the semisimple part is a polynomial in F, so the pair stays valid
    return WDPair(w.model, semisimple_part(w.frobenius), w.inertia, w.N, check=False)


# ---------------------------------------------------------------------------
# monodromy filtration


@dataclass
class MonodromyFiltration:
    """M_k = span of basis vectors of degree <= k; vectors come from Jordan chains."""

    dim: int
    vectors: list          # (degree, vector)
    degrees: tuple         # all k from -(m-1) to m-1

    def piece(self, k: int) -> list:
        return [v for deg, v in self.vectors if deg <= k]

    def graded_basis(self, k: int) -> list:
        return [v for deg, v in self.vectors if deg == k]

    def graded_dims(self) -> dict[int, int]:
        dims = {k: len(self.graded_basis(k)) for k in self.degrees}
        return {k: d for k, d in dims.items() if d}

    def basis_matrix(self) -> Matrix:
        return Matrix.from_columns([v for _, v in sorted(self.vectors, key=lambda t: t[0])])


def monodromy_filtration(N: Matrix) -> MonodromyFiltration:
    chains = jordan_chains(N)
    n = N.rows
    vectors = []
    top = max((length for length, _ in chains), default=1)
    for length, v in chains:
        w = v
        for j in range(length):
            vectors.append((length - 1 - 2 * j, w))
            w = N.apply(w)
    degrees = tuple(range(-(top - 1), top))
    filt = MonodromyFiltration(n, vectors, degrees)
    _verify_filtration(N, filt)
    return filt


def _verify_filtration(N: Matrix, filt: MonodromyFiltration):
    lo = filt.degrees[0]
    for k in filt.degrees:
        Mk = filt.piece(k)
        Mk2 = filt.piece(k - 2)
        for v in Mk:
            Nv = N.apply(v)
            if any(not x.is_zero() for x in Nv) and span_rank(Mk2 + [Nv]) != span_rank(Mk2):
                raise WDError(f"N M_{k} is not inside M_{k - 2}")
    for k in filt.degrees:
        if k <= 0:
            continue
        src = filt.graded_basis(k)
        if len(src) != len(filt.graded_basis(-k)):
            raise WDError(f"gr_{k} and gr_{-k} differ in dimension")
        Nk = N ** k
        images = [Nk.apply(v) for v in src]
        below = filt.piece(-k - 1) if -k - 1 >= lo else []
        if span_rank(below + images) != len(below) + len(src) or span_rank(below) != len(below):
            raise WDError(f"N^{k} is not injective on gr_{k}")


# ---------------------------------------------------------------------------
# weights and purity


def _restricted_block(F: Matrix, lower: list, upper: list) -> Matrix:
    """Matrix of F on span(lower + upper)/span(lower), in the basis ``upper``."""
    basis = lower + upper
    B = Matrix.from_columns(basis)
    coords = []
    for v in upper:
        x = B.solve(F.apply(v))
        if x is None:
            raise WDError("Frobenius does not preserve the monodromy filtration")
        coords.append(x[len(lower):])
    return Matrix.from_columns(coords)


def graded_frobenius(w: WDPair, filt: MonodromyFiltration | None = None) -> dict[int, Matrix]:
    filt = filt or monodromy_filtration(w.N)
    out = {}
    for k in filt.degrees:
        upper = filt.graded_basis(k)
        if upper:
            out[k] = _restricted_block(w.frobenius, filt.piece(k - 1), upper)
    return out


def _maximal_orders(bound: int) -> list[int]:
    """Orders m with phi(m) <= bound that are maximal under divisibility."""
    cands = [m for m in range(1, 8 * bound * bound + 8) if totient(m) <= bound]
    return [m for m in cands if not any(o != m and o % m == 0 for o in cands)]


def _field_order(p: Polynomial) -> int:
    n = 1
    for c in p.coeffs:
        n = n * c.n // math.gcd(n, c.n)
    return n


def eigenvalue_weights(F: Matrix, q) -> dict[int, int]:
    """Map weight k -> number of distinct eigenvalues of the form zeta * q^(k/2).

    Raises WeightError when some eigenvalue has no such form.
    """
    q = _frac(q)
    g = F.char_poly().squarefree_part()
    D = g.degree
    upper = g.cauchy_bound()
    const = g.coeffs[0]
    if const.is_zero():
        raise WeightError("zero is an eigenvalue")
    recip = Polynomial(list(reversed(g.coeffs))).monic()
    lower_inv = recip.cauchy_bound()
    # q^j = |alpha|^2 lies in [1/lower_inv^2, upper^2]
    jmax = 0
    while q ** (jmax + 1) <= upper ** 2:
        jmax += 1
    jmin = 0
    while q ** (jmin - 1) >= 1 / lower_inv ** 2:
        jmin -= 1
    orders = _maximal_orders(D * totient(_field_order(g)))
    remaining = g
    found: dict[int, int] = {}
    y = Polynomial.x()
    for j in range(jmin, jmax + 1):
        if remaining.degree == 0:
            break
        s = q_half_power(q, j)
        # roots of gj are alpha / s
        gj = remaining.compose_scale(s).monic()
        for m in orders:
            if gj.degree == 0:
                break
            r = gj.x_power_mod(m) - Polynomial([1])
            h = gj.gcd(r) if not r.is_zero() else gj
            if h.degree > 0:
                found[j] = found.get(j, 0) + h.degree
                gj = (gj // h).monic()
        remaining = gj.compose_scale(s.inverse()).monic()
    if remaining.degree > 0:
        raise WeightError("some Frobenius eigenvalue is not a root of unity times a half-integral power of q")
    return found


def purity_check(w: WDPair, weight: int) -> bool:
    """True iff every eigenvalue of F on gr_k has q-weight exactly weight + k."""
    filt = monodromy_filtration(w.N)
    pure = True
    for k, Fk in graded_frobenius(w, filt).items():
        weights = eigenvalue_weights(Fk, w.q)
        if set(weights) != {weight + k}:
            pure = False
    return pure


# ---------------------------------------------------------------------------
# base change, indecomposability, Steinberg parameters


def local_base_change(w: WDPair, kind: str = "unramified", subgroup: Subgroup | None = None, index: int = 2) -> WDPair:
    """Restriction to the Weil group of a quadratic extension.

    ``unramified`` squares Frobenius and replaces q by q^2; ``ramified``
    restricts inertia to a Frobenius-stable index-2 subgroup.
    """
    if index != 2:
        raise WDError("only quadratic extensions are supported")
    if kind == "unramified":
        act = w.model.frobenius_power_action(2)
        model = WeilModel(w.model.inertia, act, w.q ** 2, w.model.tame_generator)
        rho = GroupRep(model.inertia, w.inertia.images, check=False)
        return WDPair(model, w.frobenius @ w.frobenius, rho, w.N)
    if kind == "ramified":
        if subgroup is None or subgroup.index != 2 * w.model.inertia.index or not subgroup.issubset(w.model.inertia):
            raise WDError("ramified base change needs an index-2 subgroup of inertia")
        model = WeilModel(subgroup, w.model.frobenius_action, w.q,
                          w.model.tame_generator if w.model.tame_generator in subgroup.member_set else None)
        return WDPair(model, w.frobenius, restrict(w.inertia, subgroup), w.N)
    raise WDError(f"unsupported extension description {kind!r}")


def commutant(w: WDPair) -> list[Matrix]:
    mats = [w.frobenius, w.N] + list(w.inertia.images.values())
    return commutant_basis(mats)


def is_indecomposable(w: WDPair) -> bool:
    """True iff the commutant algebra is local.

    In characteristic zero the radical of an algebra is the radical of its
    trace form, so the algebra is local exactly when that form has rank 1.
    """
    basis = commutant(w)
    gram = Matrix([[(a @ b).trace() for b in basis] for a in basis])
    return gram.rank() == 1


_D_SIGN = Matrix.diag([1, 1, 1, -1])
_D_KLINGEN = Matrix.diag([1, -1, 1, 1])


def steinberg_parameter(kind: str, q, twist=1) -> WDPair:
    """Parameters of the Steinberg representation of GSp(4) and of the Klingen Steinberg.

    ``gsp4_steinberg`` is twist (x) S4 arranged so N is the regular nilpotent of
    sp4; ``klingen_st`` is a dihedral 2-dimensional piece (x) S2.
    """
    q = _frac(q)
    if q <= 1:
        raise WDError("q must exceed 1")
    twist = twist if isinstance(twist, Scalar) else Scalar(twist)
    if kind == "gsp4_steinberg":
        w = wd_from_parameter(SL2Parameter.unramified([twist], [4], q))
        return w.conjugate(_D_SIGN)
    if kind == "klingen_st":
        C3 = cyclic(3)
        inversion = [C3.inv(a) for a in range(3)]
        model = WeilModel(C3, inversion, q, tame_generator=1)
        z = Scalar.zeta(3)
        rho = GroupRep(C3, {a: Matrix.diag([z ** a, z ** (-a)]) for a in range(3)})
        swap = Matrix([[0, 1], [1, 0]]) * twist
        piece = WDPair(model, swap, rho)
        w = wd_from_parameter(SL2Parameter([(piece, 2)]))
        return w.conjugate(_D_KLINGEN)
    raise WDError(f"invalid kind {kind!r}")


def dihedral_type_model(q) -> tuple[WeilModel, GroupRep]:
    """Inertia Z/3 with Frobenius acting by inversion and its 2-dimensional type."""
    C3 = cyclic(3)
    model = WeilModel(C3, [C3.inv(a) for a in range(3)], q, tame_generator=1)
    z = Scalar.zeta(3)
    rho = GroupRep(C3, {a: Matrix.diag([z ** a, z ** (-a)]) for a in range(3)})
    return model, rho
