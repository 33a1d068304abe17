from math import gcd

import pytest

from divweyl import catalogue
from divweyl.cyclicalg import CyclicAlgebra, reduced_norm, regular_rep
from divweyl.matrixnf import MatrixNF, monomial_structure
from divweyl.numberfield import NormStatus, cyclotomic_field, quadratic_field
from divweyl.permcycle import CycleType, Permutation, cycle_type_of
from divweyl.weyl import (Group, affine_summary, coset_report, exclusion_tags, phi,
                          representable_in_SL1, stabilizer_search, weyl_subgroup_Dx,
                          weyl_subgroup_SL1)

QI = quadratic_field(-1)
HAMILTON = catalogue.algebra("hamilton")
GAUSS3 = catalogue.algebra("gauss-3")
CUBIC7 = catalogue.algebra("cubic7")
CYCLO5 = catalogue.algebra("cyclo5")


def test_phi_examples():
    assert cycle_type_of(phi(4, 1)) == CycleType.of(4)
    assert cycle_type_of(phi(4, 2)) == CycleType.of(2, 2)
    assert phi(5, 0).is_identity()
    with pytest.raises(ValueError):
        phi(3, 3)


@pytest.mark.parametrize("d", range(1, 13))
def test_phi_is_a_homomorphism_with_homogeneous_cycles(d):
    for i in range(d):
        ell = d // gcd(i, d)
        assert cycle_type_of(phi(d, i)) == CycleType((ell,) * (d // ell))
        for j in range(d):
            assert phi(d, i) * phi(d, j) == phi(d, (i + j) % d)


@pytest.mark.parametrize("name", ["hamilton", "cubic7", "cyclo5", "period11-5", "cyclo7"])
def test_phi_is_the_permutation_of_regular_rep(name):
    alg = catalogue.algebra(name)
    for i in range(alg.degree):
        mono = monomial_structure(regular_rep(alg.x_power(i)))
        assert mono is not None and mono.perm == phi(alg, i)


@pytest.mark.parametrize("name, types", [
    ("hamilton", {CycleType.of(1, 1), CycleType.of(2)}),
    ("cubic7", {CycleType.of(1, 1, 1), CycleType.of(3)}),
    ("cyclo5", {CycleType.of(1, 1, 1, 1), CycleType.of(4), CycleType.of(2, 2)}),
])
def test_weyl_subgroup_Dx(name, types):
    alg = catalogue.algebra(name)
    sub = weyl_subgroup_Dx(alg)
    assert sub.order == alg.degree and sub.is_subgroup()
    assert set(sub.cycle_types()) == types
    if name == "cyclo5":
        assert len(sub.cycle_types()[CycleType.of(4)]) == 2


def test_weyl_subgroup_SL1_examples():
    sub = weyl_subgroup_SL1(HAMILTON)
    assert set(sub.elements) == {Permutation.identity(2), phi(2, 1)} and sub.exact
    sub = weyl_subgroup_SL1(GAUSS3)
    assert sub.elements == [Permutation.identity(2)] and sub.exact
    sub = weyl_subgroup_SL1(CUBIC7)
    assert sub.order == 1 and sub.exact


def test_SL1_for_d_six():
    K = cyclotomic_field(7)
    # -a^3 = 1 is a norm, so phi(sigma^3) lifts to SL_1
    sub = weyl_subgroup_SL1(CyclicAlgebra(K, -1))
    assert sub.order == 2 and phi(6, 3) in sub
    # -a^3 = -27: the search cannot decide, so the answer is flagged
    sub = weyl_subgroup_SL1(catalogue.algebra("cyclo7"), height_bound=1)
    assert sub.order == 1 and not sub.exact


def test_representable_in_SL1():
    assert representable_in_SL1(HAMILTON, 0).status is NormStatus.YES
    rep = representable_in_SL1(HAMILTON, 1)
    assert rep.status is NormStatus.YES and rep.norm_target == 1
    assert reduced_norm(rep.element) == 1
    assert monomial_structure(regular_rep(rep.element)).perm == phi(2, 1)
    assert representable_in_SL1(GAUSS3, 1).status is NormStatus.NO
    # sqrt3-2: -a = -2 = N(1 + sqrt 3); the lift is a genuine norm-one element
    rep = representable_in_SL1(catalogue.algebra("sqrt3-2"), 1)
    assert rep.status is NormStatus.YES and reduced_norm(rep.element) == 1


# ---------------------------------------------------------------- reports


def test_exclusion_tags_d3():
    assert exclusion_tags(CycleType.of(1, 1, 1), Group.SL1) == []
    assert exclusion_tags(CycleType.of(2, 1), "SL1") == ["unique_smallest", "big", "lonely"]
    assert exclusion_tags(CycleType.of(3), Group.SL1) == ["min_poly_thm", "thm_Q"]
    assert exclusion_tags(CycleType.of(3), Group.DX) == []
    # powers of two escape the minimal-polynomial theorem but not the root-of-unity one
    assert exclusion_tags(CycleType.of(4), Group.SL1) == ["thm_Q"]
    assert exclusion_tags(CycleType.of(1, 1), Group.SL1) == []


def test_coset_report_d3_SL1():
    rep = coset_report(3, Group.SL1, CUBIC7)
    assert rep[(1, 1, 1)].verdict == "RepresentableFundamental"
    assert rep[(2, 1)].verdict == "ExcludedBy"
    assert set(rep[(2, 1)].excluded_by) >= {"unique_smallest", "lonely"}
    assert rep[(3,)].excluded_by == ["min_poly_thm", "thm_Q"]
    assert not rep.conflicts()
    assert any("e(D) = d = 3" in n for n in rep.notes)


def test_coset_report_d7_Dx_without_algebra():
    rep = coset_report(7, "Dx")
    assert rep[(3, 2, 2)].excluded_by == ["lonely"]
    assert rep[(7,)].verdict == "Unknown"
    assert rep[(1,) * 7].verdict == "RepresentableFundamental"
    assert len(rep.entries) == 15


def test_coset_report_d7_Dx_with_algebra():
    rep = coset_report(7, "Dx", catalogue.algebra("period29-7"))
    assert rep[(7,)].verdict == "RepresentableFundamental"
    assert not rep.conflicts()


def test_coset_report_degree_mismatch():
    with pytest.raises(ValueError):
        coset_report(4, Group.DX, CUBIC7)


def test_report_d2_has_no_exclusions():
    rep = coset_report(2, Group.SL1, HAMILTON)
    assert all(not v.excluded_by for v in rep.entries.values())
    assert rep[(2,)].verdict == "RepresentableFundamental"


# ---------------------------------------------------------------- stabilizer


def test_stabilizer_search_hamilton_height_2():
    hits = stabilizer_search(HAMILTON, 2)
    i = QI.gen()
    xi = HAMILTON.x_power(1, i)
    found = {z: m for z, m in hits}
    assert xi in found
    assert regular_rep(xi) == MatrixNF(QI, [[0, i], [i, 0]])
    assert HAMILTON.scalar(i) in found and found[HAMILTON.scalar(i)].perm.is_identity()
    assert HAMILTON.element([1, 1]) not in found
    assert all(len(z.support()) == 1 for z in found)
    # height <= 2 values: 7 per coordinate, 7^2 - 1 nonzero field elements per slot
    assert len(hits) == 2 * (7**2 - 1)


def test_stabilizer_search_cap():
    with pytest.raises(ValueError):
        stabilizer_search(CYCLO5, 4, max_elements=1000)


# ---------------------------------------------------------------- affine


def test_affine_summary_texts():
    assert affine_summary(GAUSS3)[0] == "W_SL1 trivial; affine action is by translations only"
    assert affine_summary(CUBIC7)[0] == "W_SL1 trivial; affine action is by translations only"
    lines = affine_summary(HAMILTON)
    assert lines[0].startswith("W_SL1 = {1, phi(sigma^1)") and lines[0].endswith("affine = order-2 group x| Q")
