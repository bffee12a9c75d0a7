"""Univariate polynomials with Scalar coefficients."""

from __future__ import annotations

from typing import Sequence

from .scalar import Scalar


def _s(x):
    return x if isinstance(x, Scalar) else Scalar(x)


class Polynomial:
    """Coefficients are stored lowest degree first, trailing zeros removed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [_s(x) for x in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-_s(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self) -> Scalar:
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.lead().inverse()
        return Polynomial([c * inv for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Scalar(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Scalar(0),) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            k = _s(other)
            return Polynomial([c * k for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Scalar(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Polynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = other.lead().inverse()
        quo = [Scalar(0)] * max(len(rem) - dq, 1)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            f = c * inv
            quo[i - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - f * b
        return Polynomial(quo), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Polynomial":
        return Polynomial([c * i for i, c in enumerate(self.coeffs)][1:])

    def squarefree_part(self) -> "Polynomial":
        g = self.gcd(self.derivative())
        return (self // g).monic() if g.degree > 0 else self.monic()

    def x_power_mod(self, e: int) -> "Polynomial":
        """x^e reduced modulo self."""
        result = Polynomial([1]) % self
        base = Polynomial.x() % self
        while e:
            if e & 1:
                result = (result * base) % self
            e >>= 1
            if e:
                base = (base * base) % self
        return result

    def cauchy_bound(self):
        """Rational R with every complex root of absolute value at most R."""
        from fractions import Fraction

        if self.degree < 1:
            return Fraction(0)
        lead = self.lead()
        m = Fraction(0)
        for c in self.coeffs[:-1]:
            m = max(m, _abs_bound(c / lead))
        return 1 + m

    def __call__(self, x):
        """Horner evaluation at a Scalar or a square Matrix."""
        from .matrix import Matrix

        if isinstance(x, Matrix):
            acc = Matrix.zeros(x.rows)
            ident = Matrix.identity(x.rows)
            for c in reversed(self.coeffs):
                acc = acc @ x + ident * c
            return acc
        x = _s(x)
        acc = Scalar(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_scale(self, k) -> "Polynomial":
        """p(k x)."""
        k = _s(k)
        out, pw = [], Scalar(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * k
        return Polynomial(out)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = str(c)
            if mono and cs == "1":
                parts.append(mono)
            elif mono and cs == "-1":
                parts.append("-" + mono)
            elif mono:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"({cs})" if " " in cs else cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]!r})"


def _abs_bound(c: Scalar):
    """Upper bound for the complex absolute value of c."""
    return sum((abs(a) for a in c.c), start=type(c.c[0])(0))
