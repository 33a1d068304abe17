"""Permutations of ``{1..d}``, cycle types, the exclusion predicates and exact censuses."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, fsum, lcm
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "CycleType", "CycleFlags", "cycle_type_of", "classify_cycle_type",
    "count_with_type", "partitions", "census", "census_bruteforce", "big_cycle_fraction_exact",
    "census_by_type", "predicate_holds", "CensusResult", "big_cycle_fraction_float",
    "PREDICATES", "MAX_CENSUS_DEGREE",
]

MAX_CENSUS_DEGREE = 60


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..d}`` in one-line notation (``images[i-1]`` is the image of ``i``)."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        imgs = list(range(1, d + 1))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                imgs[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition, ``(self * other)(i) == self(other(i))``."""
        if other.degree != self.degree:
            raise ValueError("permutations of different degrees")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        out = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            out[j - 1] = i
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, stored in decreasing order; fixed points count as 1-cycles."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        ls = tuple(sorted(self.lengths, reverse=True))
        if not ls or any(k < 1 for k in ls):
            raise ValueError(f"invalid cycle type {self.lengths}")
        object.__setattr__(self, "lengths", ls)

    @classmethod
    def of(cls, *lengths: int) -> CycleType:
        return cls(tuple(lengths))

    @property
    def d(self) -> int:
        return sum(self.lengths)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.lengths).items(), reverse=True))

    def is_homogeneous(self) -> bool:
        return len(set(self.lengths)) == 1

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.lengths)) + "}"


def cycle_type_of(p: Permutation) -> CycleType:
    return CycleType(tuple(len(c) for c in p.cycles()))


@dataclass(frozen=True)
class CycleFlags:
    unique_smallest: bool
    big_cycle: bool
    lonely_indices: frozenset[int]
    is_d_cycle: bool

    @property
    def lonely(self) -> bool:
        return bool(self.lonely_indices)

    def tags(self) -> list[str]:
        out = []
        if self.unique_smallest:
            out.append("unique_smallest")
        if self.big_cycle:
            out.append("big")
        if self.lonely:
            out.append("lonely")
        return out


def _subset_sums(lengths: Iterable[int]) -> int:
    """Bitmask of all sums of nonempty sub-multisets (bit ``s`` set iff ``s`` is reachable)."""
    reach = 1
    for k in lengths:
        reach |= reach << k
    return reach & ~1


def _is_lonely(lengths: Sequence[int], i: int, d: int) -> bool:
    k = lengths[i]
    others = lengths[:i] + lengths[i + 1:]
    if (_subset_sums(others) >> k) & 1:
        return False
    if k == max(lengths) and d % k == 0:
        return False
    return True


def classify_cycle_type(ct: CycleType) -> CycleFlags:
    """Flags for the unique-smallest, big and lonely criteria.

    ``lonely_indices`` index into ``ct.lengths`` (decreasing order).

    >>> f = classify_cycle_type(CycleType.of(3, 2, 2))
    >>> f.unique_smallest, f.big_cycle, sorted(f.lonely_indices)
    (False, False, [0])
    """
    ls = ct.lengths
    d = ct.d
    is_d_cycle = len(ls) == 1
    smallest = ls[-1]
    unique_smallest = not is_d_cycle and ls.count(smallest) == 1
    big = any(2 * k > d and k < d for k in ls)
    lonely = frozenset(i for i in range(len(ls)) if _is_lonely(ls, i, d))
    return CycleFlags(unique_smallest, big, lonely, is_d_cycle)


def count_with_type(ct: CycleType) -> int:
    """Number of permutations of this cycle type, ``d! / prod(k^m_k m_k!)``."""
    den = 1
    for k, m in Counter(ct.lengths).items():
        den *= k**m * factorial(m)
    return factorial(ct.d) // den


def partitions(d: int) -> Iterator[CycleType]:
    """All cycle types of ``S_d``, largest parts first, in reverse lexicographic order."""

    def rec(n: int, maxp: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for k in range(min(n, maxp), 0, -1):
            for rest in rec(n - k, k):
                yield (k,) + rest

    for p in rec(d, d):
        yield CycleType(p)


# ---------------------------------------------------------------- census

# Census predicates see the partition as (length, multiplicity) pairs with
# strictly decreasing lengths.
PartPairs = Sequence[tuple[int, int]]


def _pairs_big(d: int, pairs: PartPairs) -> bool:
    k = pairs[0][0]
    return 2 * k > d and k < d


def _pairs_unique_smallest(d: int, pairs: PartPairs) -> bool:
    return pairs[-1][1] == 1 and pairs[0][0] != d


def _pairs_lonely(d: int, pairs: PartPairs) -> bool:
    largest = pairs[0][0]
    for idx, (k, m) in enumerate(pairs):
        if k == largest and d % k == 0:
            continue
        if m > 1:
            # another copy of k is itself a subset sum equal to k
            continue
        reach = 1
        for j, (k2, m2) in enumerate(pairs):
            if j != idx:
                for _ in range(m2):
                    reach |= reach << k2
        if not (reach >> k) & 1:
            return True
    return False


def _pairs_any(d: int, pairs: PartPairs) -> bool:
    return _pairs_big(d, pairs) or _pairs_unique_smallest(d, pairs) or _pairs_lonely(d, pairs)


PREDICATES: dict[str, Callable[[int, PartPairs], bool]] = {
    "lonely": _pairs_lonely,
    "big": _pairs_big,
    "unique_smallest": _pairs_unique_smallest,
    "any_exclusion": _pairs_any,
}

_ALIASES = {"unique-smallest": "unique_smallest", "any": "any_exclusion",
            "any-exclusion": "any_exclusion", "big_cycle": "big"}


def _predicate(name: str) -> Callable[[int, PartPairs], bool]:
    key = _ALIASES.get(name, name)
    if key not in PREDICATES:
        raise ValueError(f"unknown predicate {name!r}; choose from {sorted(PREDICATES)}")
    return PREDICATES[key]


def predicate_holds(name: str, ct: CycleType) -> bool:
    pairs = sorted(Counter(ct.lengths).items(), reverse=True)
    return _predicate(name)(ct.d, pairs)


@dataclass(frozen=True)
class CensusResult:
    d: int
    predicate: str
    count: int
    fraction: Fraction


def census(d: int, predicate: str) -> CensusResult:
    """Number of permutations in ``S_d`` satisfying ``predicate``, summed over partitions.

    Each partition contributes ``count_with_type``; ``fraction`` is the count over ``d!``.
    """
    if not 1 <= d <= MAX_CENSUS_DEGREE:
        raise ValueError(f"census supports 1 <= d <= {MAX_CENSUS_DEGREE}, got {d}")
    pred = _predicate(predicate)
    fact = factorial(d)
    weight = [None] + [[k**m * factorial(m) for m in range(d // k + 1)] for k in range(1, d + 1)]
    stack: list[tuple[int, int]] = []
    total = 0

    def rec(n: int, maxp: int, den: int) -> None:
        nonlocal total
        for k in range(min(n, maxp), 1, -1):
            wk = weight[k]
            for m in range(n // k, 0, -1):
                r = n - k * m
                stack.append((k, m))
                if r == 0:
                    if pred(d, stack):
                        total += fact // (den * wk[m])
                else:
                    rec(r, k - 1, den * wk[m])
                stack.pop()
        stack.append((1, n))
        if pred(d, stack):
            total += fact // (den * weight[1][n])
        stack.pop()

    rec(d, d, 1)
    return CensusResult(d, _ALIASES.get(predicate, predicate), total, Fraction(total, fact))


def census_by_type(d: int, predicate: str) -> dict[CycleType, int]:
    """Contribution of each qualifying cycle type (small ``d`` only)."""
    return {ct: count_with_type(ct) for ct in partitions(d) if predicate_holds(predicate, ct)}


def census_bruteforce(d: int, predicate: str) -> int:
    """Count by walking all ``d!`` permutations and classifying each one."""
    if d > 9:
        raise ValueError("brute force census is limited to d <= 9")
    _predicate(predicate)
    cache: dict[tuple[int, ...], bool] = {}
    total = 0
    for images in itertools.permutations(range(1, d + 1)):
        key = cycle_type_of(Permutation(images)).lengths
        hit = cache.get(key)
        if hit is None:
            # classify through the public flags, not the census fast path
            flags = classify_cycle_type(CycleType(key))
            hit = cache[key] = {
                "lonely": flags.lonely,
                "big": flags.big_cycle,
                "unique_smallest": flags.unique_smallest,
                "any_exclusion": flags.lonely or flags.big_cycle or flags.unique_smallest,
            }[_ALIASES.get(predicate, predicate)]
        total += hit
    return total


def big_cycle_fraction_exact(d: int) -> Fraction:
    """Proportion of ``S_d`` with a cycle of length ``k``, ``d/2 < k < d``: the sum of ``1/k``."""
    if d < 1:
        raise ValueError("d must be positive")
    ks = range(d // 2 + 1, d)
    common = lcm(*ks) if ks else 1
    return Fraction(sum(common // k for k in ks), common)


def big_cycle_fraction_float(d: int) -> float:
    """Same quantity in floating point, for very large ``d`` (harmonic-number difference)."""
    if d < 1:
        raise ValueError("d must be positive")
    return fsum(1.0 / k for k in range(d // 2 + 1, d))
