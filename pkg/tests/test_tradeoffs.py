import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from geocoherence.coherence import geometric_coherence
from geocoherence.qubit import (
    CIRCULAR,
    COMPUTATIONAL,
    HADAMARD,
    TILTED,
    DomainError,
    QubitState,
    maximally_coherent_mixed,
    purity,
)
from geocoherence.tradeoffs import (
    IncompatibilityVector,
    ceiling_check,
    ceiling_saturated,
    complementarity_check,
    descending_triples,
    f_convex,
    incompatibility,
    incompatibility_vector,
    mixedness,
    overlap_triple_feasible,
    purity_ceiling,
    three_basis_case,
    three_basis_check,
    three_basis_grid_oracle,
    three_basis_lower_bound,
    two_basis_check,
    two_basis_grid_oracle,
    two_basis_lower_bound,
)

from strategies import bases, kets, states

purities = st.floats(0.5, 1.0)
incompat = st.floats(0.5, 1.0)


def test_purity_ceiling_endpoints():
    assert purity_ceiling(0.5) == 0.0
    assert purity_ceiling(1.0) == 0.5
    with pytest.raises(DomainError):
        purity_ceiling(0.4)


@given(states(), bases())
def test_ceiling_and_complementarity_hold(rho, basis):
    assert not ceiling_check(rho, basis).violated
    assert not complementarity_check(rho, basis).violated


@given(states(), bases())
def test_ceiling_and_complementarity_share_slack(rho, basis):
    # the two forms differ only by a rewrite of the purity term
    assert_allclose(ceiling_check(rho, basis).slack, complementarity_check(rho, basis).slack, atol=1e-12)


def test_ceiling_saturated_on_equal_diagonals():
    rho = maximally_coherent_mixed(0.3)
    assert ceiling_saturated(rho, COMPUTATIONAL)
    assert ceiling_check(rho, COMPUTATIONAL).saturated
    assert not ceiling_saturated(rho, TILTED)


def test_mixedness_range():
    assert mixedness(QubitState.maximally_mixed()) == 1.0
    assert mixedness(QubitState.from_bloch([0, 0, 1])) == 0.0


def test_overlap_triple_examples():
    assert overlap_triple_feasible(1.0, 0.5, 0.5)
    assert not overlap_triple_feasible(1.0, 1.0, 0.5)
    # a + b below 1 - sqrt(c) only fails in dimension two
    assert not overlap_triple_feasible(0.01, 0.01, 0.5)
    assert overlap_triple_feasible(0.01, 0.01, 0.5, dim2=False)


@given(kets(), kets(), kets())
def test_overlap_triples_of_real_kets_are_feasible(x, z, r):
    from geocoherence.qubit import overlap2

    assert overlap_triple_feasible(overlap2(x, r), overlap2(z, r), overlap2(z, x))


def test_incompatibility_named():
    assert_allclose(incompatibility(HADAMARD, TILTED).value, 0.9, atol=1e-15)
    assert_allclose(incompatibility(CIRCULAR, TILTED).value, 0.5, atol=1e-15)
    assert incompatibility(COMPUTATIONAL, COMPUTATIONAL).value == 1.0
    assert incompatibility(COMPUTATIONAL, HADAMARD).value == 0.5


@given(bases(), bases())
def test_incompatibility_range_and_symmetry(x, y):
    c = incompatibility(x, y).value
    assert 0.5 <= c <= 1.0 + 1e-12
    assert_allclose(c, incompatibility(y, x).value, atol=1e-15)


def test_incompatibility_vector_validation():
    with pytest.raises(DomainError):
        IncompatibilityVector(0.6, 0.7, 0.5)
    with pytest.raises(DomainError):
        IncompatibilityVector(1.2, 0.7, 0.5)


@given(purities)
def test_two_basis_bound_vanishes_for_compatible_bases(p):
    assert two_basis_lower_bound(p, 1.0) == 0.0


@given(purities, incompat, incompat)
def test_two_basis_bound_decreases_with_incompatibility(p, c1, c2):
    lo, hi = sorted((c1, c2))
    assert two_basis_lower_bound(p, lo) >= two_basis_lower_bound(p, hi) - 1e-15


@given(states(), bases(), bases())
def test_two_basis_relation_holds(rho, x, y):
    r = two_basis_check(rho, x, y)
    assert not r.violated
    assert_allclose(r.lhs, geometric_coherence(rho, x).value + geometric_coherence(rho, y).value)


def test_two_basis_saturates_on_maximally_mixed():
    r = two_basis_check(QubitState.maximally_mixed(), HADAMARD, CIRCULAR)
    assert r.slack == 0.0 and r.saturated


@pytest.mark.parametrize("p", [0.5, 0.8, 1.0])
@pytest.mark.parametrize("c", [0.5, 0.7, 0.9, 1.0])
def test_two_basis_oracle_matches(p, c):
    assert_allclose(two_basis_grid_oracle(p, c), two_basis_lower_bound(p, c), atol=1e-4)


def test_f_convex_scalar_and_array():
    assert f_convex(0.0, 0.9) == 1.0
    assert_allclose(f_convex(np.array([0.0, 0.5, 1.0]), 1.0), [1.0, 0.0, 1.0])


def test_three_basis_case_selection():
    assert three_basis_case(IncompatibilityVector(0.9, 0.8, 0.5)) == 1
    assert three_basis_case(IncompatibilityVector(0.5, 0.5, 0.5)) == 2


def test_three_identical_bases_give_zero():
    assert_allclose(three_basis_lower_bound(0.9, IncompatibilityVector(1.0, 1.0, 1.0)), 0.0, atol=1e-15)


def test_three_mutually_unbiased_pure():
    # a pure state against three mutually unbiased bases
    b = three_basis_lower_bound(1.0, IncompatibilityVector(0.5, 0.5, 0.5))
    rho = QubitState.from_bloch([0, 0, 1])
    lhs = sum(geometric_coherence(rho, x).value for x in (COMPUTATIONAL, HADAMARD, CIRCULAR))
    assert lhs >= b - 1e-12
    assert b > 0


@given(states(), bases(), bases(), bases())
def test_three_basis_relation_holds(rho, x, y, z):
    r = three_basis_check(rho, x, y, z)
    assert not r.violated
    assert r.extras["case"] in (1, 2)


@given(bases(), bases(), bases())
def test_incompatibility_vector_sorted(x, y, z):
    cv = incompatibility_vector(x, y, z)
    assert cv.c1 >= cv.c2 >= cv.c3


@settings(max_examples=10, deadline=None)
@given(purities, st.lists(incompat, min_size=3, max_size=3))
def test_three_basis_oracle_never_below_bound(p, cs):
    cv = IncompatibilityVector(*sorted(cs, reverse=True))
    assert three_basis_grid_oracle(p, cv) >= three_basis_lower_bound(p, cv) - 1e-3


def test_descending_triples_count():
    triples = descending_triples([0.5, 0.75, 1.0])
    assert len(triples) == 10
    assert all(t.c1 >= t.c2 >= t.c3 for t in triples)
    assert len({t.as_tuple() for t in triples}) == 10


def _eigenbasis(rho):
    from geocoherence.qubit import eig_hermitian_2x2

    return eig_hermitian_2x2(rho.matrix).basis()


def test_two_basis_saturation_needs_compatible_bases():
    rho = QubitState.from_bloch([0, 0, 0.6])
    r = two_basis_check(rho, COMPUTATIONAL, COMPUTATIONAL.swapped())
    assert r.saturated
    assert incompatibility(COMPUTATIONAL, _eigenbasis(rho)).value == pytest.approx(1.0)


@given(states(), bases(), bases())
def test_two_basis_saturation_implies_compatibility(rho, x, y):
    r = two_basis_check(rho, x, y)
    if r.saturated and purity(rho) > 0.5 + 1e-7:
        b = _eigenbasis(rho)
        for basis in (x, y):
            assert incompatibility(basis, b).value > 1 - 1e-3
