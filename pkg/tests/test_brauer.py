import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from divweyl import _arith
from divweyl.brauer import (InvariantVector, hilbert_symbol, invariant_checks, local_solvability, oo,
                            parse_place, quaternion_invariants, relevant_places, root_of_unity_report)
from divweyl.cyclicalg import CyclicAlgebra, Division, is_division
from divweyl.numberfield import field_norm, quadratic_field

PLACES = [oo, 2, 3, 5, 7]
nonzero_ints = st.integers(-60, 60).filter(bool)


@pytest.mark.parametrize("a, b, v, expected", [
    (-1, -1, oo, -1), (-1, -1, 2, -1), (-1, -1, 3, 1), (2, 3, 3, -1), (2, 3, 2, -1),
    (Fraction(1, 2), 5, 5, -1), (7, 7, 7, -1), (5, 5, 5, 1),
])
def test_hilbert_examples(a, b, v, expected):
    assert hilbert_symbol(a, b, v) == expected


def test_hilbert_symbol_matches_solvability_oracle_small_box():
    for a, b in itertools.product(range(-12, 13), repeat=2):
        if a and b:
            for v in PLACES:
                assert (hilbert_symbol(a, b, v) == 1) == local_solvability(a, b, v), (a, b, v)


@given(nonzero_ints, nonzero_ints, st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_hilbert_symbol_oracle_random(a, b, p):
    assert (hilbert_symbol(a, b, p) == 1) == local_solvability(a, b, p)


@given(rationals(40, 12, nonzero=True), rationals(40, 12, nonzero=True))
def test_product_formula_and_symmetry(a, b):
    prod = 1
    for v in relevant_places(a, b):
        s = hilbert_symbol(a, b, v)
        assert s == hilbert_symbol(b, a, v)
        prod *= s
    assert prod == 1


@given(nonzero_ints, nonzero_ints, nonzero_ints, st.sampled_from(PLACES + [11]))
def test_bimultiplicative(a, b1, b2, v):
    assert hilbert_symbol(a, b1 * b2, v) == hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v)
    # and only the square class matters
    assert hilbert_symbol(a * 9, b1 * 4, v) == hilbert_symbol(a, b1, v)


def test_hilbert_rejects_bad_input():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 1, 2)
    with pytest.raises(ValueError):
        hilbert_symbol(1, 1, 4)


def test_parse_place():
    assert parse_place("inf") == oo and parse_place("7") == 7
    with pytest.raises(ValueError):
        parse_place("9")


# ---------------------------------------------------------------- invariants


def test_quaternion_invariant_examples():
    assert quaternion_invariants(CyclicAlgebra(quadratic_field(-1), -1)) == {2: Fraction(1, 2), oo: Fraction(1, 2)}
    assert quaternion_invariants(CyclicAlgebra(quadratic_field(3), 2)) == {2: Fraction(1, 2), 3: Fraction(1, 2)}
    assert len(quaternion_invariants(CyclicAlgebra(quadratic_field(2), 1))) == 0


def test_invariant_checks_examples():
    hamilton = invariant_checks({2: Fraction(1, 2), oo: Fraction(1, 2)})
    assert hamilton.sum_zero and hamilton.index == 2
    empty = invariant_checks({})
    assert empty.sum_zero and empty.index == 1
    assert not invariant_checks({3: Fraction(1, 3)}).sum_zero
    mixed = invariant_checks({3: Fraction(1, 3), 5: Fraction(1, 6), 7: Fraction(1, 2)})
    assert mixed.sum_zero and mixed.index == 6


def test_invariant_vector_normalises():
    v = InvariantVector({5: Fraction(3, 2), 3: Fraction(1), oo: Fraction(-1, 2)})
    assert v.entries == {5: Fraction(1, 2), oo: Fraction(1, 2)}
    assert v[3] == 0
    assert v.as_dict() == {"5": "1/2", "inf": "1/2"}


def small_norm_witness(m, c, bound=6):
    vals = {Fraction(p, q) for q in range(1, bound + 1) for p in range(-bound * q, bound * q + 1)}
    return any(x * x - m * y * y == c for x in vals for y in vals)


@given(st.sampled_from([-1, -2, -3, 2, 3, 5, -7, 6]), st.integers(-20, 20).filter(bool))
def test_quaternion_index_matches_division(m, a):
    alg = CyclicAlgebra(quadratic_field(m), a)
    summary = invariant_checks(quaternion_invariants(alg))
    assert summary.sum_zero
    verdict = is_division(alg)
    if summary.index == 2:
        assert verdict.status is Division.YES
        assert not small_norm_witness(m, Fraction(a), 3)
    else:
        assert summary.index == 1
        assert verdict.status is Division.NO
        assert field_norm(alg.field, verdict.witness) == a


# ---------------------------------------------------------------- roots of unity


@pytest.mark.parametrize("d", range(3, 13))
def test_root_of_unity_branches(d):
    rep = root_of_unity_report(d, prime_bound=1000)
    assert rep.verdict == "Excluded"
    assert rep.order == (d if d % 2 else 2 * d)
    assert rep.phi == _arith.euler_phi(rep.order)
    if d in (4, 8):
        assert rep.branch == "local degree obstruction"
        assert rep.max_local_degree < d
    else:
        assert rep.branch == "degree obstruction"
        assert d % rep.phi != 0


def test_root_of_unity_reason_text():
    assert any("phi(3) = 2 is even" in line for line in root_of_unity_report(3).trace)
    assert any("2^2 = 4 divides phi(12) = 4" in line for line in root_of_unity_report(6).trace)
    rep4 = root_of_unity_report(4, prime_bound=200)
    assert rep4.max_local_degree == 2


def test_root_of_unity_needs_d_above_two():
    with pytest.raises(ValueError):
        root_of_unity_report(2)
