"""Splitting of primes in quadratic fields and a search for imaginary
quadratic fields in which a given finite set of primes splits."""

from __future__ import annotations

from typing import Iterable


class SplittingError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def is_squarefree(d: int) -> bool:
    if d == 0:
        return False
    d = abs(d)
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def quadratic_splitting(d: int, p: int) -> str:
    """'split', 'inert' or 'ramified' for p in Q(sqrt d)."""
    if not is_squarefree(d):
        raise SplittingError(f"d = {d} must be a nonzero square-free integer")
    if not is_prime(p):
        raise SplittingError(f"{p} is not prime")
    if p == 2:
        if d % 8 == 1:
            return "split"
        if d % 4 in (2, 3):
            return "ramified"
        return "inert"
    if d % p == 0:
        return "ramified"
    return "split" if legendre(d, p) == 1 else "inert"


def splitting_by_factorization(d: int, p: int) -> str:
    """Odd p only: count roots of x^2 - d modulo p directly."""
    roots = [x for x in range(p) if (x * x - d) % p == 0]
    return {0: "inert", 1: "ramified", 2: "split"}[len(roots)]


def cm_family_search(primes: Iterable[int], bound: int) -> dict:
    primes = sorted(set(int(p) for p in primes))
    for p in primes:
        if not is_prime(p):
            raise SplittingError(f"{p} is not prime")
    if bound < 1:
        raise SplittingError("bound must be positive")
    found = []
    for a in range(1, bound + 1):
        d = -a
        if not is_squarefree(d):
            continue
        if all(quadratic_splitting(d, p) == "split" for p in primes):
            found.append(d)
    out = {"primes": primes, "bound": bound, "d": found}
    if not found:
        out["hint"] = "no field found below the bound; raise the bound"
    return out
