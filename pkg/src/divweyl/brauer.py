"""Local data over Q: Hilbert symbols, quaternion invariants, root-of-unity checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Mapping, Union

import numpy as np

from . import _arith
from ._arith import euler_phi, multiplicative_order

if TYPE_CHECKING:
    from .cyclicalg import CyclicAlgebra

__all__ = [
    "oo", "Place", "hilbert_symbol", "relevant_places", "InvariantVector",
    "quaternion_invariants", "invariant_checks", "multiplicative_order",
    "root_of_unity_report", "RootOfUnityReport", "local_solvability", "place_name",
    "parse_place", "InvariantSummary",
]

#: the real place
oo = math.inf

Place = Union[int, float]


def _check_place(v: Place) -> None:
    if v != oo and not (isinstance(v, int) and _arith.is_prime(v)):
        raise ValueError(f"not a place of Q: {v!r}")


def place_name(v: Place) -> str:
    return "inf" if v == oo else str(v)


def parse_place(text: str) -> Place:
    t = text.strip().lower()
    if t in ("inf", "oo", "infinity", "∞"):
        return oo
    v = int(t)
    _check_place(v)
    return v


def hilbert_symbol(a: Fraction | int, b: Fraction | int, v: Place) -> int:
    """The Hilbert symbol ``(a, b)_v`` in ``{1, -1}``.

    >>> hilbert_symbol(-1, -1, oo), hilbert_symbol(-1, -1, 2), hilbert_symbol(-1, -1, 3)
    (-1, -1, 1)
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    _check_place(v)
    if v == oo:
        return -1 if a < 0 and b < 0 else 1
    # the symbol only sees square classes
    x, y = _arith.squarefree_part(a), _arith.squarefree_part(b)
    p = v
    alpha, beta = _arith.valuation(x, p), _arith.valuation(y, p)
    u, w = x // p**alpha, y // p**beta
    if p != 2:
        eps = ((p - 1) // 2) % 2
        sign = -1 if (alpha * beta * eps) % 2 else 1
        return sign * _arith.legendre(u, p) ** beta * _arith.legendre(w, p) ** alpha

    def e(n: int) -> int:
        return ((n - 1) // 2) % 2

    def om(n: int) -> int:
        return ((n * n - 1) // 8) % 2

    return -1 if (e(u) * e(w) + alpha * om(w) + beta * om(u)) % 2 else 1


def relevant_places(*qs: Fraction | int) -> list[Place]:
    """``oo``, 2 and every prime dividing a numerator or denominator of ``qs``."""
    primes = {2}
    for q in qs:
        q = Fraction(q)
        primes.update(_arith.prime_divisors(q.numerator))
        primes.update(_arith.prime_divisors(q.denominator))
    return [oo, *sorted(primes)]


@dataclass(frozen=True)
class InvariantVector:
    """Local invariants in ``[0, 1)``; places not listed carry invariant 0."""

    entries: Mapping[Place, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for v, x in self.entries.items():
            _check_place(v)
            x = Fraction(x) % 1
            if x:
                clean[v] = x
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, v: Place) -> Fraction:
        return self.entries.get(v, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, InvariantVector):
            return self.entries == other.entries
        if isinstance(other, Mapping):
            return self == InvariantVector(other)
        return NotImplemented

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[str, str]:
        return {place_name(v): f"{x.numerator}/{x.denominator}" for v, x in self.entries.items()}


@dataclass(frozen=True)
class InvariantSummary:
    sum_zero: bool
    index: int


def invariant_checks(vec: InvariantVector | Mapping[Place, Fraction]) -> InvariantSummary:
    """Sum-to-zero test and index (lcm of reduced denominators) of an invariant vector."""
    if not isinstance(vec, InvariantVector):
        vec = InvariantVector(vec)
    total = sum(vec.entries.values(), Fraction(0))
    index = 1
    for x in vec.entries.values():
        index = math.lcm(index, x.denominator)
    return InvariantSummary(sum_zero=total % 1 == 0, index=index)


def quaternion_invariants(alg: CyclicAlgebra) -> InvariantVector:
    """Invariants of ``(Q(sqrt m)/Q, sigma, a)``: 1/2 exactly where ``(a, m)_v = -1``."""
    if alg.degree != 2:
        raise ValueError("quaternion invariants need a degree-2 algebra")
    m = alg.field.quadratic_m
    return InvariantVector({v: Fraction(1, 2) for v in relevant_places(alg.a, m)
                            if hilbert_symbol(alg.a, m, v) == -1})


@dataclass
class RootOfUnityReport:
    d: int
    order: int
    phi: int
    verdict: str
    branch: str
    trace: list[str]
    primes_checked: int = 0
    max_local_degree: int | None = None


def root_of_unity_report(d: int, prime_bound: int = 10_000) -> RootOfUnityReport:
    """Why a degree-``d`` division algebra over Q has no element of order ``d`` / ``2d``.

    Odd ``d`` rules out order ``d``, even ``d`` order ``2d``: either the cyclotomic
    degree does not divide ``d``, or ``d = 2^e`` and every odd prime has too small a
    local degree.
    """
    if d <= 2:
        raise ValueError("the obstruction needs d > 2")
    r = d if d % 2 else 2 * d
    phi = euler_phi(r)
    trace = [f"r = {r}: a primitive r-th root of unity has order r",
             f"Q(zeta_{r}) would be a subfield of degree phi({r}) = {phi}, which must divide d = {d}"]
    if d % phi:
        if d % 2:
            trace.append(f"d odd: phi({r}) = {phi} is even, so it cannot divide {d}")
        else:
            e = _arith.valuation(d, 2)
            trace.append(f"d = 2^{e} * {d >> e}: 2^{e + 1} = {2 ** (e + 1)} divides phi({r}) = {phi}")
        return RootOfUnityReport(d, r, phi, "Excluded", "degree obstruction", trace)
    e = _arith.valuation(d, 2)
    if d != 2**e:
        raise AssertionError(f"phi({r}) divides {d} although d is not a power of 2")
    modulus = 2 ** (e + 1)
    # (Z/2^(e+1))^x = Z/2 x Z/2^(e-1), so every unit has order <= 2^(e-1)
    exponent = 2 ** (e - 1)
    trace.append(f"d = 2^{e}: phi(2d) = d, so Q(zeta_{r}) would be a maximal subfield splitting D")
    trace.append("local invariants have 2-power orders with lcm d and sum 0, and inv_inf has order <= 2 < d, "
                 "so at least two finite primes, one of them an odd p, have local index d")
    trace.append(f"local degree [Q_p(zeta_{r}) : Q_p] = order of p in (Z/{modulus}Z)^x "
                 f"<= exponent {exponent} < {d}; the local index must divide it")
    worst = 0
    checked = 0
    for p in range(3, prime_bound, 2):
        if _arith.is_prime(p):
            k = multiplicative_order(p, modulus)
            worst = max(worst, k)
            checked += 1
            if k >= d:
                raise AssertionError(f"prime {p} has order {k} >= {d} modulo {modulus}")
    trace.append(f"checked {checked} odd primes below {prime_bound}: maximal order {worst} < {d}")
    return RootOfUnityReport(d, r, phi, "Excluded", "local degree obstruction", trace,
                             primes_checked=checked, max_local_degree=worst)


def local_solvability(a: int, b: int, p: Place) -> bool:
    """Whether ``z^2 = a x^2 + b y^2`` has a nontrivial solution over ``Q_p``, by search.

    Independent of the symbol formulas.  ``a`` and ``b`` are first reduced to
    squarefree integers.  A primitive solution modulo ``p^k`` whose gradient
    ``(2ax, 2by, -2z)`` has valuation ``v`` with ``2v < k`` lifts to ``Z_p`` by
    Hensel's lemma; for squarefree ``a, b`` a primitive ``Q_p``-solution always has
    ``v <= 1`` (odd ``p``) or ``v <= 2`` (``p = 2``), so ``k = 3`` resp. ``k = 5``
    decides solvability exactly.
    """
    if p == oo:
        # z^2 - a x^2 - b y^2 is anisotropic over R exactly when a, b < 0
        return not (a < 0 and b < 0)
    return _solvable_squarefree(_arith.squarefree_part(a), _arith.squarefree_part(b), p)


@lru_cache(maxsize=None)
def _solvable_squarefree(a: int, b: int, p: int) -> bool:
    k = 5 if p == 2 else 3
    q = p**k
    half = k / 2

    def val(n: np.ndarray) -> np.ndarray:
        out = np.zeros(n.shape, dtype=np.int64)
        n = n % q
        cur = n.copy()
        for _ in range(k):
            hit = (cur % p == 0) & (cur != 0)
            out += hit
            cur = np.where(hit, cur // p, cur)
        return np.where(n == 0, k, out)

    r = np.arange(q, dtype=np.int64)
    # per residue t: does some z with z^2 = t exist with the given side conditions?
    z_sq = (r * r) % q
    z_unit = r % p != 0
    z_grad = val(2 * r) < half
    any_z = np.zeros(q, bool)
    prim_z = np.zeros(q, bool)
    grad_z = np.zeros(q, bool)
    both_z = np.zeros(q, bool)
    np.logical_or.at(any_z, z_sq, True)
    np.logical_or.at(prim_z, z_sq, z_unit)
    np.logical_or.at(grad_z, z_sq, z_grad)
    np.logical_or.at(both_z, z_sq, z_unit & z_grad)
    x = r[:, None]
    y = r[None, :]
    t = (a * x * x + b * y * y) % q
    xy_prim = (x % p != 0) | (y % p != 0)
    xy_grad = (val(2 * a * x) < half) | (val(2 * b * y) < half)
    ok = np.where(xy_grad & xy_prim, any_z[t],
                  np.where(xy_grad, prim_z[t], np.where(xy_prim, grad_z[t], both_z[t])))
    return bool(ok.any())
