"""Exact elements of cyclotomic fields Q(zeta_n).

A value is stored as a coefficient vector in the power basis
1, z, ..., z^(phi(n)-1) of Q(zeta_n), reduced modulo the n-th cyclotomic
polynomial.  The order n grows lazily: mixing values of orders m and n
lifts both to lcm(m, n).  Square roots of rationals are folded into the
field through quadratic Gauss sums, so half-integral powers of a residue
cardinality q are ordinary elements.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class NotRepresentable(ArithmeticError):
    """Raised when a requested value has no representation in the tower."""


# ---------------------------------------------------------------------------
# cyclotomic bookkeeping


def _poly_divexact(num, den):
    # integer polynomials, low degree first, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("order must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, cyclotomic_poly(d))
    return tuple(p)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def units(n: int) -> tuple[int, ...]:
    return tuple(a for a in range(1, n + 1) if math.gcd(a, n) == 1) if n > 1 else (1,)


@lru_cache(maxsize=None)
def power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds z^e reduced mod Phi_n, for 0 <= e < n."""
    phi = totient(n)
    cyc = cyclotomic_poly(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


def _mobius(n: int) -> int:
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple[Fraction, ...]:
    # normalized trace Tr(z^k)/phi(n) = mu(n/g)/phi(n/g) with g = gcd(k, n)
    out = []
    for k in range(totient(n)):
        m = n // math.gcd(k, n)
        out.append(Fraction(_mobius(m), totient(m)))
    return tuple(out)


def _norm_order(n: int) -> int:
    return n // 2 if n % 4 == 2 else n


def _reduce(coeffs, n):
    """Reduce a long coefficient list (exponents 0..) into the power basis."""
    phi = totient(n)
    if len(coeffs) <= phi:
        return coeffs + [Fraction(0)] * (phi - len(coeffs))
    table = power_table(n)
    out = list(coeffs[:phi])
    for e in range(phi, len(coeffs)):
        c = coeffs[e]
        if c:
            row = table[e % n]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


def _integral(coeffs):
    den = 1
    for c in coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _reduce_int(coeffs, n):
    phi = totient(n)
    if len(coeffs) <= phi:
        return coeffs + [0] * (phi - len(coeffs))
    table = power_table(n)
    out = coeffs[:phi]
    for e in range(phi, len(coeffs)):
        c = coeffs[e]
        if c:
            row = table[e % n]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


def _lift(coeffs, m, n):
    """Express an element of Q(zeta_m) in the basis of Q(zeta_n), m | n."""
    if m == n:
        return coeffs
    step = n // m
    table = power_table(n)
    phi = totient(n)
    out = [Fraction(0)] * phi
    for k, c in enumerate(coeffs):
        if c:
            row = table[(k * step) % n]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


# ---------------------------------------------------------------------------


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Scalar:
    """An element of Q(zeta_n) with exact rational coefficients."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, value=0, n: int = 1, coeffs=None):
        if coeffs is None:
            if isinstance(value, Scalar):
                self.n, self.c, self._hash = value.n, value.c, value._hash
                return
            self.n = 1
            self.c = (_as_fraction(value),)
        else:
            if n % 4 == 2:
                raise ValueError("orders congruent to 2 mod 4 are not canonical")
            coeffs = [Fraction(x) for x in coeffs]
            if len(coeffs) != totient(n):
                coeffs = _reduce(coeffs, n)
            if not any(coeffs[1:]):
                n, coeffs = 1, coeffs[:1]
            self.n = n
            self.c = tuple(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, n, coeffs):
        s = object.__new__(cls)
        if n > 1 and not any(coeffs[1:]):
            n, coeffs = 1, coeffs[:1]
        s.n = n
        s.c = tuple(coeffs)
        s._hash = None
        return s

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Scalar":
        """The root of unity exp(2 pi i k / n)."""
        if n < 1:
            raise ValueError("order must be positive")
        g = math.gcd(k, n)
        n, k = n // g, (k // g) % (n // g)
        sign = 1
        if n % 4 == 2:
            m = n // 2
            if k % 2:
                sign = -1
            k = (k * (m + 1) // 2) % m if m > 1 else 0
            n = m
        if n == 1:
            return cls(sign)
        coeffs = [Fraction(sign * x) for x in power_table(n)[k]]
        return cls._raw(n, coeffs)

    @classmethod
    def sqrt_rational(cls, r) -> "Scalar":
        """Square root of a rational number, principal branch."""
        r = _as_fraction(r)
        if r == 0:
            return cls(0)
        num, den = r.numerator, r.denominator
        # sqrt(a/b) = sqrt(a b) / b
        t = abs(num) * den
        s = math.isqrt(t)
        if s * s == t:
            out = cls(Fraction(s, den))
        else:
            square, free = _split_square(t)
            out = cls(Fraction(square, den))
            for p in _prime_factors(free):
                out = out * _sqrt_prime(p)
        if num < 0:
            out = out * cls.zeta(4)
        return out

    @classmethod
    def parse(cls, text: str, q=None) -> "Scalar":
        return parse_scalar(text, q)

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return self.n == 1 or not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        try:
            return Scalar(x)
        except TypeError:
            return None

    def _common(self, other):
        if self.n == other.n:
            return self.n, self.c, other.c
        n = _norm_order(self.n * other.n // math.gcd(self.n, other.n))
        return n, _lift(self.c, self.n, n), _lift(other.c, other.n, n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Scalar._raw(1, (self.c[0] + other.c[0],))
        n, a, b = self._common(other)
        return Scalar._raw(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.n, [-x for x in self.c])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.n == 1:
            f = other.c[0]
            if f == 1:
                return self
            return Scalar._raw(self.n, [x * f for x in self.c])
        if self.n == 1:
            f = self.c[0]
            if f == 1:
                return other
            return Scalar._raw(other.n, [x * f for x in other.c])
        n, a, b = self._common(other)
        # integer numerators over a common denominator, one division at the end
        A, da = _integral(a)
        B, db = _integral(b)
        prod = [0] * (2 * len(A) - 1)
        for i, x in enumerate(A):
            if x:
                for j, y in enumerate(B):
                    if y:
                        prod[i + j] += x * y
        den = da * db
        return Scalar._raw(n, [Fraction(v, den) for v in _reduce_int(prod, n)])

    __rmul__ = __mul__

    def galois(self, a: int) -> "Scalar":
        """Apply the automorphism z -> z^a (a coprime to the order)."""
        n = self.n
        if n == 1:
            return self
        if math.gcd(a, n) != 1:
            raise ValueError("Galois exponent must be a unit")
        table = power_table(n)
        phi = totient(n)
        out = [Fraction(0)] * phi
        for k, c in enumerate(self.c):
            if c:
                row = table[(k * a) % n]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Scalar._raw(n, out)

    def conj(self) -> "Scalar":
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        if self.n == 1:
            return self.c[0]
        p = self
        for a in units(self.n)[1:]:
            p = p * self.galois(a)
        return p.to_fraction()

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.n == 1:
            return Scalar._raw(1, (1 / self.c[0],))
        rest = Scalar(1)
        for a in units(self.n)[1:]:
            rest = rest * self.galois(a)
        nrm = (self * rest).to_fraction()
        return rest * (1 / nrm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = Scalar(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def trace(self) -> Fraction:
        """Normalized trace Tr(x)/[Q(x):Q] computed in the current field."""
        w = _trace_weights(self.n)
        return sum((c * wk for c, wk in zip(self.c, w) if c), Fraction(0))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        n, a, b = self._common(other)
        return list(a) == list(b)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.trace())
        return self._hash

    # -- roots of unity -----------------------------------------------------

    def root_of_unity_order(self):
        """Multiplicative order if this is a root of unity, else None."""
        bound = 2 * self.n
        if self ** bound != 1:
            return None
        for d in sorted(_divisors(bound)):
            if self ** d == 1:
                return d
        return None  # pragma: no cover

    def is_root_of_unity(self) -> bool:
        return self.root_of_unity_order() is not None

    def as_root_of_unity(self):
        """(d, k) with self = zeta(d, k), or None."""
        d = self.root_of_unity_order()
        if d is None:
            return None
        for k in range(d):
            if math.gcd(k, d) == 1 and Scalar.zeta(d, k) == self:
                return d, k
        return None  # pragma: no cover

    def sqrt(self) -> "Scalar":
        """A square root inside the tower; raises NotRepresentable otherwise."""
        if self.is_rational():
            return Scalar.sqrt_rational(self.to_fraction())
        red = self.reduced()
        # r * zeta: take sqrt of each factor
        nz = [(k, c) for k, c in enumerate(red.c) if c]
        if len(nz) == 1:
            k, c = nz[0]
            return Scalar.sqrt_rational(c) * Scalar.zeta(2 * red.n, k)
        # generic search among a + b with small support is not attempted
        for extra in (1, 2, 4, 8, 3, 6, 12, 5):
            m = _norm_order(red.n * extra * 2)
            cand = _sqrt_by_linear_algebra(red, m)
            if cand is not None:
                return cand
        raise NotRepresentable(f"no square root of {self} found in the tower")

    # -- canonical form -----------------------------------------------------

    def reduced(self) -> "Scalar":
        """Same value expressed at the minimal cyclotomic order."""
        n = self.n
        if n == 1:
            return self
        for m in sorted(_divisors(n)):
            if m % 4 == 2 or m == n:
                continue
            fixed = all(self.galois(a) == self for a in units(n) if a % m == 1)
            if not fixed:
                continue
            coeffs = _descend(self.c, m, n)
            if coeffs is not None:
                return Scalar._raw(m, coeffs)
        return self

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar('{format_scalar(self)}')"


# ---------------------------------------------------------------------------
# helpers


def _divisors(n):
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return out


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _split_square(t):
    square, free, p = 1, 1, 2
    while p * p <= t:
        e = 0
        while t % p == 0:
            t //= p
            e += 1
        square *= p ** (e // 2)
        if e % 2:
            free *= p
        p += 1
    return square, free * t


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Scalar:
    if p == 2:
        # sqrt 2 = z8 + z8^-1
        return Scalar.zeta(8, 1) + Scalar.zeta(8, 7)
    g = Scalar(0)
    for a in range(1, p):
        g = g + Scalar.zeta(p, a) * (1 if pow(a, (p - 1) // 2, p) == 1 else -1)
    if p % 4 == 1:
        return g
    return g * Scalar.zeta(4, 3)


def _solve_rational(rows, rhs):
    """Solve rows * x = rhs over Q; rows is a list of lists.  None if inconsistent."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    piv_cols = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, len(m)):
        if m[i][-1]:
            return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(piv_cols):
        x[col] = m[i][-1]
    return x


def _descend(coeffs, m, n):
    phi_m = totient(m)
    cols = [_lift([Fraction(int(i == k)) for i in range(phi_m)], m, n) for k in range(phi_m)]
    rows = [[cols[k][i] for k in range(phi_m)] for i in range(totient(n))]
    return _solve_rational(rows, list(coeffs))


def _sqrt_by_linear_algebra(x: Scalar, m: int):
    # Only handles the case where x is a rational multiple of a square of an
    # element (a + b z^k) with small support; kept deliberately narrow.
    for d in sorted(_divisors(m)):
        if d == 1 or d % 4 == 2:
            continue
        for k in range(d):
            z = Scalar.zeta(d, k)
            for a in (1, -1, 2, -2):
                y = Scalar(a) + z
                sq = y * y
                if sq.is_zero():
                    continue
                r = x / sq
                if r.is_rational():
                    f = r.to_fraction()
                    return Scalar.sqrt_rational(f) * y
    return None


# ---------------------------------------------------------------------------
# text format


def _fmt_frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(x: Scalar) -> str:
    x = x.reduced()
    terms = []
    for k, c in enumerate(x.c):
        if not c:
            continue
        if k == 0:
            body = _fmt_frac(abs(c))
        else:
            mono = f"z{x.n}" if k == 1 else f"z{x.n}^{k}"
            body = mono if abs(c) == 1 else f"{_fmt_frac(abs(c))}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>\d+(?:/\d+)?)
      | (?P<z>z(?P<zn>\d+))
      | (?P<qpow>q\^\{(?P<qe>-?\d+)(?:/(?P<qd>\d+))?\})
      | (?P<qpow2>q\^(?P<qe2>-?\d+))
      | (?P<q>q)
      | (?P<sqrt>sqrt\()
      | (?P<i>i)
      | (?P<op>[-+*/^()])
    )""",
    re.VERBOSE,
)


def _tokens(text):
    pos = 0
    text = text.strip()
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at position {pos}")
        pos = m.end()
        out.append(m)
    return out


def _q_power(q, num, den):
    if q is None:
        raise ValueError("q-powers need a residue cardinality")
    q = Fraction(q)
    e = Fraction(num, den)
    if e.denominator not in (1, 2):
        raise NotRepresentable("only half-integral q-powers are supported")
    if e.denominator == 1:
        return Scalar(q ** e.numerator)
    # q^(k/2) = q^floor(k/2) * sqrt(q)
    return Scalar(q ** (e.numerator // 2)) * Scalar.sqrt_rational(q)


class _Parser:
    def __init__(self, text, q):
        self.toks = _tokens(text)
        self.i = 0
        self.q = q

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def op(self, ch):
        t = self.peek()
        if t is not None and t.group("op") == ch:
            self.i += 1
            return True
        return False

    def expr(self):
        neg = False
        if self.op("-"):
            neg = True
        else:
            self.op("+")
        val = self.term()
        if neg:
            val = -val
        while True:
            if self.op("+"):
                val = val + self.term()
            elif self.op("-"):
                val = val - self.term()
            else:
                return val

    def term(self):
        val = self.factor()
        while True:
            if self.op("*"):
                val = val * self.factor()
            elif self.op("/"):
                val = val / self.factor()
            else:
                return val

    def factor(self):
        base = self.atom()
        if self.op("^"):
            neg = self.op("-")
            t = self.peek()
            if t is None or t.group("num") is None or "/" in t.group("num"):
                raise ValueError("exponent must be an integer")
            self.i += 1
            e = int(t.group("num"))
            base = base ** (-e if neg else e)
        return base

    def atom(self):
        t = self.peek()
        if t is None:
            raise ValueError("unexpected end of scalar")
        self.i += 1
        if t.group("num"):
            return Scalar(Fraction(t.group("num")))
        if t.group("z"):
            return Scalar.zeta(int(t.group("zn")))
        if t.group("qpow"):
            return _q_power(self.q, int(t.group("qe")), int(t.group("qd") or 1))
        if t.group("qpow2"):
            return _q_power(self.q, int(t.group("qe2")), 1)
        if t.group("q"):
            return _q_power(self.q, 1, 1)
        if t.group("i"):
            return Scalar.zeta(4)
        if t.group("sqrt"):
            inner = self.expr()
            if not self.op(")"):
                raise ValueError("unbalanced sqrt(")
            return inner.sqrt()
        if t.group("op") == "(":
            v = self.expr()
            if not self.op(")"):
                raise ValueError("unbalanced parenthesis")
            return v
        if t.group("op") == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {t.group(0)!r}")


def parse_scalar(text, q=None) -> Scalar:
    """Parse the textual scalar format; q supplies meaning for q-powers."""
    if isinstance(text, Scalar):
        return text
    if isinstance(text, (int, Fraction)):
        return Scalar(text)
    if not isinstance(text, str):
        raise TypeError(f"scalar must be given as a string, got {type(text).__name__}")
    p = _Parser(text, q)
    val = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in scalar {text!r}")
    return val


ZERO = Scalar(0)
ONE = Scalar(1)
