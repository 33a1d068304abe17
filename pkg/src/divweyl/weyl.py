"""Which Weyl-group cosets (cycle types in ``S_d``) a cyclic division algebra can represent.

The Galois group ``<sigma>`` is identified with ``{1..d}`` via ``sigma^j -> j + 1``;
``phi(sigma^i)`` is left multiplication by ``sigma^i`` on that set, i.e. the
permutation underlying the monomial matrix ``regular_rep(x^i)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import _arith
from .cyclicalg import (AlgElement, CyclicAlgebra, Division, basis_norm_formula, is_division,
                        reduced_norm, regular_rep)
from .matrixnf import MonomialData, monomial_structure
from .numberfield import NFElement, NormStatus, is_galois_norm
from .permcycle import (CycleType, Permutation, classify_cycle_type, cycle_type_of, partitions)


class Group(str, enum.Enum):
    DX = "Dx"
    SL1 = "SL1"


def phi(alg: CyclicAlgebra | int, i: int) -> Permutation:
    """Permutation of ``Gamma`` (as ``1..d``) given by left multiplication with ``sigma^i``."""
    d = alg if isinstance(alg, int) else alg.degree
    if not 0 <= i < d:
        raise ValueError(f"exponent {i} out of range 0..{d - 1}")
    return Permutation(tuple((i + j) % d + 1 for j in range(d)))


@dataclass
class WeylSubgroup:
    d: int
    elements: list[Permutation]
    labels: dict[Permutation, str]
    exact: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.labels

    def cycle_types(self) -> dict[CycleType, list[Permutation]]:
        out: dict[CycleType, list[Permutation]] = {}
        for p in self.elements:
            out.setdefault(cycle_type_of(p), []).append(p)
        return out

    def is_subgroup(self) -> bool:
        s = set(self.elements)
        if Permutation.identity(self.d) not in s:
            return False
        return all(p * q in s for p in s for q in s) and all(p.inverse() in s for p in s)


def weyl_subgroup_Dx(alg: CyclicAlgebra) -> WeylSubgroup:
    d = alg.degree
    elems = [phi(alg, i) for i in range(d)]
    return WeylSubgroup(d, elems, {p: f"phi(sigma^{i})" for i, p in enumerate(elems)})


@dataclass(frozen=True)
class SL1Representation:
    status: NormStatus
    i: int
    norm_target: Fraction
    element: AlgElement | None = None
    detail: str = ""


def representable_in_SL1(alg: CyclicAlgebra, i: int, height_bound: int = 4) -> SL1Representation:
    """Whether ``phi(sigma^i)`` lifts to a norm-one element ``x^i b``.

    With ``(-1)^(i(d-1)) a^i = N(w)`` the element ``x^i w^-1`` has reduced norm 1;
    that is recomputed from the regular representation before returning.
    """
    d = alg.degree
    if not 0 <= i < d:
        raise ValueError(f"exponent {i} out of range 0..{d - 1}")
    target = basis_norm_formula(alg, i)
    res = is_galois_norm(alg.field, target, height_bound)
    if res.status is not NormStatus.YES:
        return SL1Representation(res.status, i, target, None, res.detail)
    if res.witness is None:
        return SL1Representation(NormStatus.YES, i, target, None, res.detail)
    elem = alg.x_power(i, res.witness.inverse())
    nrd = reduced_norm(elem)
    if nrd != 1:
        raise AssertionError(f"constructed x^{i} b has reduced norm {nrd}, expected 1")
    return SL1Representation(NormStatus.YES, i, target, elem, f"{target} = N({res.witness})")


def _division_note(alg: CyclicAlgebra) -> str | None:
    # height 1 keeps this cheap; the search only serves to spot split algebras
    verdict = is_division(alg, height_bound=1 if alg.degree > 2 else 4)
    if verdict.status is Division.YES:
        return None
    if verdict.status is Division.NO:
        return f"warning: not a division algebra ({verdict.detail})"
    return "warning: division property not certified"


def weyl_subgroup_SL1(alg: CyclicAlgebra, height_bound: int = 4) -> WeylSubgroup:
    d = alg.degree
    ident = Permutation.identity(d)
    group = WeylSubgroup(d, [ident], {ident: "1"})
    note = _division_note(alg)
    if note:
        group.notes.append(note)
    if d % 4 != 2:
        group.notes.append(f"d = {d} is not 2 mod 4: only the identity is represented")
        return group
    half = d // 2
    rep = representable_in_SL1(alg, half, height_bound)
    target = rep.norm_target
    if rep.status is NormStatus.YES:
        p = phi(alg, half)
        group.elements.append(p)
        via = f" via {rep.element}" if rep.element is not None else ""
        group.labels[p] = f"phi(sigma^{half}){via}"
        group.notes.append(f"-a^{half} = {target} is a Galois norm")
    elif rep.status is NormStatus.NO:
        group.notes.append(f"-a^{half} = {target} is not a Galois norm")
    else:
        group.exact = False
        group.notes.append(f"unknown whether -a^{half} = {target} is a Galois norm ({rep.detail})")
    return group


# ---------------------------------------------------------------- reports


@dataclass
class CosetVerdict:
    cycle_type: CycleType
    excluded_by: list[str] = field(default_factory=list)
    witness: str | None = None

    @property
    def verdict(self) -> str:
        if self.excluded_by:
            return "ExcludedBy"
        if self.witness is not None:
            return "RepresentableFundamental"
        return "Unknown"

    @property
    def conflicting(self) -> bool:
        return bool(self.excluded_by) and self.witness is not None


@dataclass
class RepresentabilityReport:
    d: int
    group: Group
    entries: dict[CycleType, CosetVerdict]
    notes: list[str] = field(default_factory=list)

    def __getitem__(self, ct: CycleType | tuple[int, ...]) -> CosetVerdict:
        if not isinstance(ct, CycleType):
            ct = CycleType(tuple(ct))
        return self.entries[ct]

    def conflicts(self) -> list[CosetVerdict]:
        return [v for v in self.entries.values() if v.conflicting]


def _is_power_of_two(n: int) -> bool:
    return n & (n - 1) == 0


def exclusion_tags(ct: CycleType, group: Group | str) -> list[str]:
    """Theorem tags that rule out every conjugate representing this cycle type."""
    group = Group(group)
    d = ct.d
    if d <= 2:
        return []
    tags = classify_cycle_type(ct).tags()
    if group is Group.SL1 and len(ct.lengths) == 1:
        if not _is_power_of_two(d):
            tags.append("min_poly_thm")
        tags.append("thm_Q")
    return tags


def coset_report(d: int, group: Group | str, alg: CyclicAlgebra | None = None,
                 height_bound: int = 4) -> RepresentabilityReport:
    group = Group(group)
    if alg is not None and alg.degree != d:
        raise ValueError(f"algebra has degree {alg.degree}, report asked for d = {d}")
    entries = {ct: CosetVerdict(ct, exclusion_tags(ct, group)) for ct in partitions(d)}
    report = RepresentabilityReport(d, group, entries)
    identity_type = CycleType((1,) * d)
    entries[identity_type].witness = "1"
    if d <= 2:
        report.notes.append("d <= 2: exclusion theorems do not apply; fundamental-apartment data only")
    if alg is not None:
        sub = weyl_subgroup_Dx(alg) if group is Group.DX else weyl_subgroup_SL1(alg, height_bound)
        for ct, perms in sub.cycle_types().items():
            entries[ct].witness = ", ".join(sub.labels[p] for p in perms)
        report.notes.extend(sub.notes)
        if group is Group.SL1 and is_division(alg, height_bound=4 if d == 2 else 1).status is Division.YES:
            report.notes.append(f"over Q the Brauer class of D has order e(D) = d = {d}; "
                                f"a^i is a norm exactly when d divides i")
    return report


# ---------------------------------------------------------------- brute force


def stabilizer_search(alg: CyclicAlgebra, height_bound: int,
                      max_elements: int = 2_000_000) -> list[tuple[AlgElement, MonomialData]]:
    """All nonzero elements of coefficient height ``<= height_bound`` with monomial image.

    Every hit must be a single-term element ``x^i b``; anything else raises.
    Results are sorted lexicographically by coefficients.
    """
    d = alg.degree
    K = alg.field
    vals = _arith.rationals_of_height(height_bound)
    n_coeffs = d * K.degree
    if len(vals) ** n_coeffs > max_elements:
        raise ValueError(f"search space {len(vals)}^{n_coeffs} exceeds {max_elements} elements")
    hits = []
    for flat in itertools.product(vals, repeat=n_coeffs):
        if not any(flat):
            continue
        coeffs = tuple(NFElement(K, flat[k * K.degree:(k + 1) * K.degree]) for k in range(d))
        z = AlgElement(alg, coeffs)
        mono = monomial_structure(regular_rep(z))
        if mono is None:
            continue
        if len(z.support()) != 1:
            raise AssertionError(f"{z} has monomial image but is not single-term")
        hits.append((flat, z, mono))
    hits.sort(key=lambda h: h[0])
    return [(z, mono) for _, z, mono in hits]


def affine_summary(alg: CyclicAlgebra, height_bound: int = 4) -> list[str]:
    sub = weyl_subgroup_SL1(alg, height_bound)
    lines = []
    if sub.order == 1:
        qualifier = "" if sub.exact else " (as far as the norm search can tell)"
        lines.append(f"W_SL1 trivial{qualifier}; affine action is by translations only")
        lines.append("(W_a)_SL1 = {1} x| Q = Q")
    else:
        labels = ", ".join(sub.labels[p] for p in sub.elements)
        lines.append(f"W_SL1 = {{{labels}}}; affine = order-{sub.order} group x| Q")
        lines.append(f"affine action: translations, optionally composed with phi(sigma^{alg.degree // 2})")
    lines.extend(sub.notes)
    return lines
