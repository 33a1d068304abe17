"""Named example algebras, one or more per degree 2..12."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclicalg import CyclicAlgebra
from .numberfield import (NumberField, custom_field, cyclotomic_field, gaussian_period_field,
                          quadratic_field)

# name -> (field builder, a)
_ENTRIES = {
    "hamilton": (lambda: quadratic_field(-1), Fraction(-1)),
    "gauss-3": (lambda: quadratic_field(-1), Fraction(-3)),
    "sqrt3-2": (lambda: quadratic_field(3), Fraction(2)),
    "cubic7": (lambda: custom_field([-1, -2, 1, 1], [-2, 0, 1], name="Q(zeta_7)^+"), Fraction(2)),
    "cyclo5": (lambda: cyclotomic_field(5), Fraction(2)),
    "period11-5": (lambda: gaussian_period_field(11, 5), Fraction(2)),
    "cyclo7": (lambda: cyclotomic_field(7), Fraction(3)),
    "period29-7": (lambda: gaussian_period_field(29, 7), Fraction(2)),
    "period17-8": (lambda: gaussian_period_field(17, 8), Fraction(3)),
    "period19-9": (lambda: gaussian_period_field(19, 9), Fraction(2)),
    "cyclo11": (lambda: cyclotomic_field(11), Fraction(2)),
    "period23-11": (lambda: gaussian_period_field(23, 11), Fraction(5)),
    "cyclo13": (lambda: cyclotomic_field(13), Fraction(2)),
}


@lru_cache(maxsize=None)
def _field(name: str) -> NumberField:
    return _ENTRIES[name][0]()


def algebra(name: str) -> CyclicAlgebra:
    if name not in _ENTRIES:
        raise KeyError(f"unknown algebra {name!r}; known: {', '.join(_ENTRIES)}")
    return CyclicAlgebra(_field(name), _ENTRIES[name][1], name=name)


def names() -> list[str]:
    return list(_ENTRIES)


def algebras_of_degree(d: int) -> list[CyclicAlgebra]:
    return [alg for alg in map(algebra, _ENTRIES) if alg.degree == d]
