"""The symplectic form on four-space, similitudes, and nilpotent orbits in sp4.

The form is J = [[0, S], [-S, 0]] with S the 2x2 antidiagonal identity, so
omega(x, y) = x^T J y pairs e1 with e4 and e2 with e3.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .exact import Matrix, NotNilpotent, Scalar, commutant_basis, jordan_blocks, jordan_data
from .groups import bilinear_form_type  # noqa: F401  re-exported

ZERO = Scalar(0)

J = Matrix([
    [0, 0, 0, 1],
    [0, 0, 1, 0],
    [0, -1, 0, 0],
    [-1, 0, 0, 0],
])


def E(i: int, j: int, value=1) -> Matrix:
    return Matrix.unit(4, i, j, value)


# representatives of the nilpotent orbits
N0 = Matrix.zeros(4)
N1 = E(1, 2)                        # long root vector
N2 = E(0, 1) - E(2, 3)              # short root vector
N3 = N1 + N2                        # regular nilpotent
N1_PRIME = E(0, 3)                  # another long root vector
N2_PRIME = E(0, 3) + E(1, 2)

REPRESENTATIVES = {"N0": N0, "N1": N1, "N2": N2, "N3": N3}
ORBIT_PARTITIONS = {"N0": (1, 1, 1, 1), "N1": (2, 1, 1), "N2": (2, 2), "N3": (4,)}
LABEL_BY_RANK = {0: "N0", 1: "N1", 2: "N2", 3: "N3"}


class SymplecticError(ValueError):
    pass


def omega(x: Sequence, y: Sequence) -> Scalar:
    return _dot(x, J.apply(y))


def _dot(u, v):
    acc = ZERO
    for a, b in zip(u, v):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc


def similitude(g: Matrix):
    """c with g^T J g = c J, or None when g is not a similitude."""
    if g.shape != (4, 4):
        raise SymplecticError("similitude needs a 4x4 matrix")
    if not g.is_invertible():
        raise SymplecticError("similitude of a singular matrix")
    m = g.transpose() @ J @ g
    c = m[0, 3]
    return c if m == J * c else None


def in_lie_algebra(N: Matrix) -> bool:
    """True iff J N is symmetric."""
    JN = J @ N
    return JN == JN.transpose()


def gl4_jordan_representative(partition: Sequence[int]) -> Matrix:
    return jordan_blocks(tuple(partition))


@dataclass(frozen=True)
class NilpotentOrbit:
    label: str
    representative: Matrix
    partition: tuple
    rank: int


ORBITS = {lab: NilpotentOrbit(lab, REPRESENTATIVES[lab], ORBIT_PARTITIONS[lab], int(lab[1])) for lab in REPRESENTATIVES}


# ---------------------------------------------------------------------------
# classification


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _scale(u, k):
    return tuple(a * k for a in u)


def _basis():
    return [tuple(Scalar(int(i == j)) for i in range(4)) for j in range(4)]


def _certificate_rank3(N):
    Nt = N
    v = next(e for e in _basis() if any(not x.is_zero() for x in (Nt ** 3).apply(e)))
    Nv = N.apply(v)
    N2v = N.apply(Nv)
    b = -omega(Nv, v) / (omega(Nv, N2v) * 2)
    v = _add(v, _scale(N2v, b))
    p4 = v
    p3 = _scale(N.apply(p4), -1)
    p2 = _scale(N.apply(N.apply(p4)), -1)
    p1 = _scale(N.apply(N.apply(N.apply(p4))), -1)
    return [p1, p2, p3, p4]


def _certificate_rank1(N):
    basis = _basis()
    cands = basis + [_add(a, b) for i, a in enumerate(basis) for b in basis[i + 1:]]
    v = next(x for x in cands if not omega(N.apply(x), x).is_zero())
    p3 = v
    p2 = N.apply(v)
    c = omega(p2, p3)
    # W = span(p2, p3)^perp
    rows = Matrix([J.transpose().apply(p2), J.transpose().apply(p3)])
    # omega(p, x) = p^T J x ; the condition omega(p, x) = 0 reads (J^T p)^T x = 0
    W = rows.nullspace()
    w1, w2 = W
    d = omega(w1, w2)
    p1 = w1
    p4 = _scale(w2, c / d)
    return [p1, p2, p3, p4]


def _certificate_rank2(N):
    kernel = N.nullspace()
    from .exact import extend_basis

    u1, u2 = extend_basis(kernel, _basis())

    def B(x, y):
        return omega(N.apply(x), y)

    b11, b12, b22 = B(u1, u1), B(u1, u2), B(u2, u2)
    if b11.is_zero():
        x = u1
        y = _add(_scale(u1, -b22 / (b12 * 2)), u2)
    else:
        disc = (b12 * b12 - b11 * b22).sqrt()
        a_plus = (-b12 + disc) / b11
        a_minus = (-b12 - disc) / b11
        x = _add(_scale(u1, a_plus), u2)
        y = _add(_scale(u1, a_minus), u2)
    p2, p4 = x, y
    c = B(p2, p4)
    p1 = N.apply(p2)
    t = -omega(p2, p4) / c
    p2 = _add(p2, _scale(p1, t))
    p3 = _scale(N.apply(p4), -1)
    return [p1, p2, p3, p4]


def classify_nilpotent(N: Matrix):
    """Orbit of a nilpotent element of sp4 and g in GSp4 with g N g^-1 = representative."""
    if N.shape != (4, 4):
        raise SymplecticError("expected a 4x4 matrix")
    if not N.is_nilpotent():
        raise NotNilpotent("matrix is not nilpotent")
    if not in_lie_algebra(N):
        raise SymplecticError("matrix is not in the symplectic Lie algebra")
    r = N.rank()
    label = LABEL_BY_RANK[r]
    if r == 0:
        return ORBITS[label], Matrix.identity(4)
    builder = {1: _certificate_rank1, 2: _certificate_rank2, 3: _certificate_rank3}[r]
    P = Matrix.from_columns(builder(N))
    g = P.inverse()
    rep = REPRESENTATIVES[label]
    if similitude(g) is None or g @ N @ P != rep:
        raise SymplecticError("internal error: certificate failed verification")  # pragma: no cover
    return ORBITS[label], g


def verify_certificate(N: Matrix, label: str, g: Matrix) -> bool:
    return similitude(g) is not None and g @ N @ g.inverse() == REPRESENTATIVES[label]


def is_partition_of_4(lam) -> bool:
    return (isinstance(lam, (tuple, list)) and all(isinstance(x, int) and x > 0 for x in lam)
            and sum(lam) == 4 and list(lam) == sorted(lam, reverse=True))


def symplectic_partition_test(lam: Sequence[int]) -> bool:
    """True iff a nilpotent of Jordan type lam is conjugate into sp4.

    Decided by the parity rule (odd parts occur with even multiplicity) and
    then certified by matching the Jordan type of an orbit representative.
    """
    lam = tuple(lam)
    if not is_partition_of_4(lam):
        raise SymplecticError(f"{lam} is not a partition of 4")
    decision = all(lam.count(p) % 2 == 0 for p in set(lam) if p % 2)
    if decision:
        label = next((k for k, v in ORBIT_PARTITIONS.items() if v == lam), None)
        if label is None:
            raise SymplecticError("internal error: no orbit for an admissible partition")  # pragma: no cover
        rep = REPRESENTATIVES[label]
        part, g = jordan_data(rep)
        if part != lam or g @ rep @ g.inverse() != gl4_jordan_representative(lam) or not in_lie_algebra(rep):
            raise SymplecticError("internal error: certificate failed")  # pragma: no cover
    return decision


def centralizer_is_scalar(images: Sequence[Matrix]) -> bool:
    """True iff only scalar matrices commute with every image."""
    return len(commutant_basis(list(images))) == 1


# ---------------------------------------------------------------------------
# random elements of GSp4(Q)


def _root_unipotents():
    out = []
    for X in (E(1, 2), E(0, 3), E(0, 1) - E(2, 3), E(0, 2) + E(1, 3)):
        for Y in (X, X.transpose()):
            out.append(Y)
    return out


WEYL = [J, Matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])]


def random_gsp4(rng: random.Random, length: int = 4, bound: int = 2) -> Matrix:
    """A product of torus, root-unipotent and Weyl elements with small entries."""
    g = Matrix.identity(4)
    roots = _root_unipotents()
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 0:
            a = rng.choice([1, -1, 2, -2])
            b = rng.choice([1, -1, 2, -2])
            c = rng.choice([1, -1, 2])
            h = Matrix.diag([a, b, Scalar(c) / b, Scalar(c) / a])
        elif kind == 1:
            X = rng.choice(roots)
            t = rng.choice([x for x in range(-bound, bound + 1) if x])
            h = Matrix.identity(4) + X * t
        else:
            h = rng.choice(WEYL)
        g = g @ h
    return g


def random_conjugate(label: str, rng: random.Random, length: int = 4) -> tuple[Matrix, Matrix]:
    h = random_gsp4(rng, length)
    return h @ REPRESENTATIVES[label] @ h.inverse(), h
