"""Randomised self-checks, grouped into suites the CLI can run.

Every suite takes a seeded :class:`random.Random` and returns a list of
:class:`Check` records; a suite passes when every check does.  The same seed
always produces the same checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import brauer, catalogue, permcycle
from .cyclicalg import (CyclicAlgebra, Division, basis_norm_formula, is_division, reduced_char_poly,
                        reduced_norm)
from .matrixnf import MatrixNF, build_cycle_matrix, char_poly, determinant, min_poly
from .numberfield import (NumberField, NormStatus, UniPoly, custom_field, cyclotomic_field,
                          field_norm, is_galois_norm, quadratic_field)
from .weyl import Group, coset_report, weyl_subgroup_Dx, weyl_subgroup_SL1


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def random_rational(rng: random.Random, num: int = 9, den: int = 5, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if q or not nonzero:
            return q


def small_fields() -> list[NumberField]:
    return [quadratic_field(-1), quadratic_field(5),
            custom_field([-1, -2, 1, 1], [-2, 0, 1], name="Q(zeta_7)^+"),
            cyclotomic_field(5), cyclotomic_field(7)]


def _element(rng: random.Random, K: NumberField):
    return K([random_rational(rng) for _ in range(K.degree)])


def suite_norms(rng: random.Random) -> list[Check]:
    """Multiplicativity of the field norm, ``N(q) = q^d`` and the basis-norm formula."""
    out = []
    for K in small_fields():
        bad = 0
        for _ in range(10):
            u, w = _element(rng, K), _element(rng, K)
            if field_norm(K, u * w) != field_norm(K, u) * field_norm(K, w):
                bad += 1
            q = random_rational(rng, nonzero=True)
            if field_norm(K, K(q)) != q**K.degree:
                bad += 1
        out.append(Check(f"norm multiplicative on {K.name}", bad == 0, f"{bad} failures"))
        a = random_rational(rng, nonzero=True)
        alg = CyclicAlgebra(K, a)
        ok = all(reduced_norm(alg.x_power(i)) == basis_norm_formula(alg, i) for i in range(K.degree))
        out.append(Check(f"Nrd(x^i) formula on {K.name}, a = {a}", ok))
        # height-1 coefficients, so the bounded search is guaranteed to reach u itself
        u = K([rng.choice((-1, 0, 1)) for _ in range(K.degree)])
        if not u.is_zero():
            c = field_norm(K, u)
            res = is_galois_norm(K, c, height_bound=1)
            ok = res.status is NormStatus.YES and (res.witness is None or field_norm(K, res.witness) == c)
            out.append(Check(f"{c} recognised as a norm from {K.name}", ok, res.detail))
    return out


def suite_charpoly(rng: random.Random) -> list[Check]:
    """Characteristic and minimal polynomials against determinants and Cayley-Hamilton."""
    out = []
    for K in small_fields()[:4]:
        n = rng.randint(2, 4)
        m = MatrixNF(K, [[_element(rng, K) for _ in range(n)] for _ in range(n)])
        p = char_poly(m)
        s = random_rational(rng)
        shifted = MatrixNF.scalar(K, n, s) - m
        out.append(Check(f"charpoly({n}x{n} over {K.name}) at {s} equals det(sI - M)",
                         p(K(s)) == determinant(shifted)))
        mp = min_poly(m)
        out.append(Check(f"minpoly divides charpoly over {K.name}",
                         (p % mp).is_zero()))
        alg = CyclicAlgebra(K, random_rational(rng, nonzero=True))
        z = alg.element([_element(rng, K) for _ in range(K.degree)])
        try:
            reduced_char_poly(z)
            out.append(Check(f"reduced charpoly rational over {K.name}", True))
        except ValueError as exc:
            out.append(Check(f"reduced charpoly rational over {K.name}", False, str(exc)))
    Q = quadratic_field(-1)
    for k in range(1, 9):
        entries = [random_rational(rng, nonzero=True) for _ in range(k)]
        prod = Fraction(1)
        for e in entries:
            prod *= e
        expect = UniPoly([Q(-prod)] + [Q(0)] * (k - 1) + [Q(1)])
        out.append(Check(f"cycle matrix k={k} has minpoly t^{k} - {prod}",
                         min_poly(build_cycle_matrix(Q, entries)) == expect))
    return out


def suite_hilbert(rng: random.Random) -> list[Check]:
    """Hilbert symbols against the local solvability search, and the product formula."""
    out = []
    mismatches = []
    for _ in range(60):
        a = random_rational(rng, 30, 1, nonzero=True).numerator
        b = random_rational(rng, 30, 1, nonzero=True).numerator
        for v in (brauer.oo, 2, 3, 5, 7):
            if (brauer.hilbert_symbol(a, b, v) == 1) != brauer.local_solvability(a, b, v):
                mismatches.append((a, b, v))
    out.append(Check("Hilbert symbol matches local solvability", not mismatches, str(mismatches[:3])))
    bad = []
    for _ in range(60):
        a, b = random_rational(rng, 50, 12, True), random_rational(rng, 50, 12, True)
        prod = 1
        for v in brauer.relevant_places(a, b):
            prod *= brauer.hilbert_symbol(a, b, v)
        if prod != 1:
            bad.append((a, b))
    out.append(Check("product formula", not bad, str(bad[:3])))
    return out


def suite_census(rng: random.Random) -> list[Check]:
    """Partition census against brute-force enumeration and the closed form."""
    out = []
    for d in sorted(rng.sample(range(1, 8), 3)):
        for pred in sorted(permcycle.PREDICATES):
            fast = permcycle.census(d, pred).count
            slow = permcycle.census_bruteforce(d, pred)
            out.append(Check(f"census d={d} {pred}", fast == slow, f"{fast} vs {slow}"))
    for d in sorted(rng.sample(range(1, 41), 5)):
        exact = permcycle.big_cycle_fraction_exact(d)
        out.append(Check(f"big-cycle closed form d={d}", exact == permcycle.census(d, "big").fraction))
    return out


def suite_roots(rng: random.Random) -> list[Check]:
    """The root-of-unity obstruction for d = 3..12."""
    out = []
    for d in range(3, 13):
        rep = brauer.root_of_unity_report(d, prime_bound=2_000)
        expect = "local degree obstruction" if d & (d - 1) == 0 else "degree obstruction"
        out.append(Check(f"d={d} excluded by {expect}", rep.verdict == "Excluded" and rep.branch == expect))
    return out


def suite_weyl(rng: random.Random) -> list[Check]:
    """Structure of the phi-images and consistency with the exclusion theorems."""
    out = []
    hamilton = catalogue.algebra("hamilton")
    sub = weyl_subgroup_SL1(hamilton)
    out.append(Check("Hamilton W_SL1 has order 2", sub.order == 2 and sub.exact))
    out.append(Check("Hamilton is a division algebra", is_division(hamilton).status is Division.YES))
    names = [n for n in catalogue.names() if catalogue.algebra(n).degree <= 8]
    for name in sorted(rng.sample(names, 4)):
        alg = catalogue.algebra(name)
        dx = weyl_subgroup_Dx(alg)
        homogeneous = all(ct.is_homogeneous() for ct in dx.cycle_types())
        out.append(Check(f"{name}: phi-image is a homogeneous subgroup of order {alg.degree}",
                         dx.order == alg.degree and dx.is_subgroup() and homogeneous))
        for group in Group:
            rep = coset_report(alg.degree, group, alg, height_bound=2)
            out.append(Check(f"{name}: no conflicts in the {group.value} report", not rep.conflicts()))
    return out


SUITES: dict[str, Callable[[random.Random], list[Check]]] = {
    "norms": suite_norms,
    "charpoly": suite_charpoly,
    "hilbert": suite_hilbert,
    "census": suite_census,
    "roots": suite_roots,
    "weyl": suite_weyl,
}


def run_suite(name: str, seed: int = 0) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](random.Random(seed))
