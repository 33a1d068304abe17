"""Small integer helpers shared by the field, local and census code."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of ``|n|`` by trial division."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n)) if n else []


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorize(n).values())


def squarefree_part(q: Fraction | int) -> int:
    """The squarefree integer in the same square class as the nonzero rational ``q``."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no square class")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return sign * out


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def multiplicative_order(p: int, n: int) -> int:
    """Least ``k >= 1`` with ``p**k == 1 (mod n)``.

    >>> multiplicative_order(3, 8)
    2
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if gcd(p, n) != 1:
        raise ValueError(f"{p} is not a unit modulo {n}")
    if n == 1:
        return 1
    k, x = 1, p % n
    while x != 1:
        x = x * p % n
        k += 1
    return k


def smallest_primitive_root(p: int) -> int:
    for r in range(2, p):
        if multiplicative_order(r, p) == p - 1:
            return r
    raise ValueError(f"no primitive root modulo {p}")


@lru_cache(maxsize=None)
def rationals_of_height(h: int) -> tuple[Fraction, ...]:
    """Rationals whose numerator and denominator are at most ``h`` in absolute value.

    Ordered by height first, so shorter searches see simpler values first.
    """
    seen: dict[Fraction, None] = {Fraction(0): None}
    for level in range(1, h + 1):
        for q in range(1, level + 1):
            for p in range(0, level + 1):
                if max(p, q) != level or gcd(p, q) != 1:
                    continue
                seen.setdefault(Fraction(p, q), None)
                seen.setdefault(Fraction(-p, q), None)
    return tuple(seen)


def height(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)
