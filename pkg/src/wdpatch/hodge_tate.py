"""Weight numerology for GSp(4): Hodge-Tate weight sets, Clozel quadruples,
archimedean parameters, Blattner parameters and descent from GL(4,R).

Parameters of the real Weil group are recorded by exponent data. A character
of C* written |z|^a (z/zbar)^k is stored as the pair (a, k), where |z| is
the usual absolute value, so it equals z^p zbar^q with p = a/2 + k and
q = a/2 - k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Matrix


class WeightError(ValueError):
    pass


# Hodge types of (g, K)-cohomology of the two discrete series packet members
COHOMOLOGY_HODGE_TYPES = {"generic": ((2, 1), (1, 2)), "holomorphic": ((3, 0), (0, 3))}


def _int(x, what):
    if isinstance(x, bool) or int(x) != x:
        raise WeightError(f"{what} must be an integer, got {x!r}")
    return int(x)


@dataclass(frozen=True)
class WeightData:
    mu1: int
    mu2: int
    w: int

    def __post_init__(self):
        mu1, mu2, w = (_int(x, n) for x, n in ((self.mu1, "mu1"), (self.mu2, "mu2"), (self.w, "w")))
        if not mu1 >= mu2 >= 0:
            raise WeightError(f"need mu1 >= mu2 >= 0, got ({mu1}, {mu2})")
        if (mu1 + mu2 - w) % 2:
            raise WeightError(f"mu1 + mu2 = {mu1 + mu2} and w = {w} have different parity")

    @property
    def nu1(self) -> int:
        return self.mu1 + 2

    @property
    def nu2(self) -> int:
        return self.mu2 + 1

    @property
    def delta(self) -> int:
        return (self.w - self.mu1 - self.mu2) // 2

    @property
    def bold_w(self) -> int:
        return self.w + 3

    @property
    def n(self) -> int:
        return self.nu1 - self.nu2

    @property
    def n_prime(self) -> int:
        return self.nu1 + self.nu2


def ht_weights(wd: WeightData) -> tuple[int, int, int, int]:
    d = wd.delta
    out = (d, wd.nu2 + d, wd.nu1 + d, wd.nu1 + wd.nu2 + d)
    if not all(a < b for a, b in zip(out, out[1:])):
        raise WeightError("internal error: weights not distinct")  # pragma: no cover
    return out


def clozel_quadruple(b: int, bold_w: int, n: int, n_prime: int) -> tuple[int, int, int, int]:
    """Highest weight (mu_1 <= ... <= mu_4) attached to the conjugate embedding."""
    b, bold_w, n, n_prime = (_int(x, "argument") for x in (b, bold_w, n, n_prime))
    if (bold_w + n) % 2 or (bold_w + n_prime) % 2:
        raise WeightError("bold_w + n and bold_w + n' must both be even")
    mu = (
        b + 3 - (bold_w + n_prime) // 2,
        b + 2 - (bold_w + n) // 2,
        b + 1 - (bold_w - n) // 2,
        b - (bold_w - n_prime) // 2,
    )
    if not all(x <= y for x, y in zip(mu, mu[1:])):
        raise WeightError(f"quadruple {mu} is not weakly increasing")
    return mu


def weights_from_highest_weight(mu) -> tuple[int, ...]:
    """Apply j = i - mu_{n-i} for i = 0, ..., n-1 (mu indexed from 1)."""
    n = len(mu)
    return tuple(i - mu[n - i - 1] for i in range(n))


def clozel_weights(wd: WeightData, b: int) -> tuple[int, ...]:
    return weights_from_highest_weight(clozel_quadruple(b, wd.bold_w, wd.n, wd.n_prime))


# ---------------------------------------------------------------------------
# archimedean parameters


def _sign_matrix_gl2(sign: int) -> Matrix:
    return Matrix([[0, 1], [sign, 0]])


@dataclass(frozen=True)
class GL2Parameter:
    n: int
    lam: Fraction
    norm_power: Fraction
    exponents: tuple
    j_image: Matrix = field(compare=False)

    @property
    def bounded(self) -> bool:
        return self.norm_power == 0

    @property
    def det_norm_power(self) -> Fraction:
        return 2 * self.norm_power

    @property
    def det_j(self) -> int:
        return int(self.j_image.det().to_fraction())

    def induced_from(self) -> tuple[Fraction, Fraction]:
        """(a, k) of the character of C* this parameter is induced from."""
        return self.norm_power, Fraction(self.n, 2)

    def characters(self) -> list[tuple[Fraction, Fraction]]:
        return [(self.norm_power, k) for k in self.exponents]


def gl2_parameter(n: int, lam) -> GL2Parameter:
    n = _int(n, "n")
    if n < 1:
        raise WeightError("n must be at least 1")
    lam = Fraction(lam)
    return GL2Parameter(n, lam, n - 1 + 2 * lam, (Fraction(n, 2), Fraction(-n, 2)),
                        _sign_matrix_gl2((-1) ** n))


def is_bounded(n: int, lam) -> bool:
    return gl2_parameter(n, lam).bounded


# positions allowed in the dual of the elliptic endoscopic group
_ENDOSCOPIC_OUTER = ((0, 0), (0, 3), (3, 0), (3, 3))
_ENDOSCOPIC_INNER = ((1, 1), (1, 2), (2, 1), (2, 2))


def _det2(m: Matrix, cells) -> object:
    (a, b, c, d) = (m[i, j] for i, j in cells)
    return a * d - b * c


def in_endoscopic_dual(m: Matrix) -> bool:
    allowed = set(_ENDOSCOPIC_OUTER + _ENDOSCOPIC_INNER)
    for i in range(4):
        for j in range(4):
            if (i, j) not in allowed and not m[i, j].is_zero():
                return False
    return _det2(m, _ENDOSCOPIC_OUTER) == _det2(m, _ENDOSCOPIC_INNER)


@dataclass(frozen=True)
class ArchimedeanParameter:
    mu0: int
    nu1: int
    nu2: int
    exponents: tuple
    j_image: Matrix = field(compare=False)

    def z_image_exponents(self) -> list[tuple[int, Fraction]]:
        return [(self.mu0, k) for k in self.exponents]

    def minus_one_sign(self) -> int:
        """The scalar by which -1 in C* acts; every exponent gives (-1)^(2k)."""
        signs = {1 - 2 * (int(2 * k) % 2) for k in self.exponents}
        if len(signs) != 1:
            raise WeightError("internal error: -1 does not act by a scalar")  # pragma: no cover
        return signs.pop()

    def hodge_types(self, shift: int = -3) -> list[tuple[int, int]]:
        """(p, q) with the z-image twisted by |.|^shift equal to z^p zbar^q."""
        a = Fraction(self.mu0 + shift, 2)
        out = []
        for k in self.exponents:
            p, q = a + k, a - k
            if p.denominator != 1 or q.denominator != 1:
                raise WeightError("twisted parameter is not algebraic")
            out.append((int(p), int(q)))
        return out


def archimedean_parameter(mu0: int, nu1: int, nu2: int) -> ArchimedeanParameter:
    mu0, nu1, nu2 = (_int(x, "argument") for x in (mu0, nu1, nu2))
    if not nu1 > nu2 >= 1:
        raise WeightError(f"need nu1 > nu2 >= 1, got ({nu1}, {nu2})")
    if (nu1 + nu2 - mu0 - 1) % 2:
        raise WeightError("nu1 + nu2 must have the parity of mu0 + 1")
    s = 1 if mu0 % 2 else -1
    j = Matrix([
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, s, 0, 0],
        [s, 0, 0, 0],
    ])
    ex = (Fraction(nu1 + nu2, 2), Fraction(nu1 - nu2, 2), Fraction(nu2 - nu1, 2), Fraction(-nu1 - nu2, 2))
    par = ArchimedeanParameter(mu0, nu1, nu2, ex, j)
    if not in_endoscopic_dual(j):
        raise WeightError("internal error: j-image outside the endoscopic dual")  # pragma: no cover
    # z-image: diagonal, outer and inner pairs have equal determinants since
    # both exponent pairs sum to zero
    if ex[0] + ex[3] != 0 or ex[1] + ex[2] != 0:
        raise WeightError("internal error: exponents not symmetric")  # pragma: no cover
    if j @ j != Matrix.identity(4) * par.minus_one_sign():
        raise WeightError("internal error: j^2 does not match the image of -1")  # pragma: no cover
    return par


def parameter_from_weights(wd: WeightData) -> ArchimedeanParameter:
    return archimedean_parameter(wd.w, wd.nu1, wd.nu2)


def blattner(nu1: int, nu2: int) -> dict:
    nu1, nu2 = _int(nu1, "nu1"), _int(nu2, "nu2")
    if not nu1 > nu2 >= 1:
        raise WeightError(f"need nu1 > nu2 >= 1, got ({nu1}, {nu2})")
    k1, k2 = nu1 + 1, nu2 + 2
    return {"k": (k1, k2), "motivic_weight": k1 + k2 - 3, "consistent": k1 + k2 - 3 == nu1 + nu2}


def descent_condition(n: int, lam, n_prime: int, lam_prime) -> dict:
    """Whether phi_n(lam) + phi_n'(lam') descends to an elliptic GSp(4,R) packet."""
    n, n_prime = _int(n, "n"), _int(n_prime, "n'")
    if n < 1 or n_prime < 1:
        raise WeightError("n and n' must be at least 1")
    lam, lam_prime = Fraction(lam), Fraction(lam_prime)
    target = Fraction(n_prime - n, 2)
    ok = lam - lam_prime == target and target.denominator == 1 and target > 0
    out = {"descends": ok, "difference": lam - lam_prime, "required": target}
    if ok:
        out.update(mu0=n - 1 + 2 * lam, nu1=(n_prime + n) // 2, nu2=(n_prime - n) // 2)
    return out
