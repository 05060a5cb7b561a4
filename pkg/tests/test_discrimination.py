import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from geocoherence.coherence import geometric_coherence
from geocoherence.discrimination import (
    DegenerateWeight,
    InvalidEnsemble,
    PureEnsemble,
    coherence_error_pair,
    ensemble_from_state,
    error_ceiling_check,
    generating_basis,
    helstrom_error,
    min_error_probability,
    state_from_ensemble,
)
from geocoherence.qubit import COMPUTATIONAL, QubitState, ket, overlap2

from strategies import bases, kets, states


def cos_sin_ensemble(theta):
    c, s = math.cos(theta), math.sin(theta)
    return PureEnsemble.of(0.5, ket(c, s), ket(s, c))


def test_ensemble_validation():
    with pytest.raises(InvalidEnsemble):
        PureEnsemble(((0.7, ket(1, 0)), (0.7, ket(0, 1))))
    with pytest.raises(InvalidEnsemble):
        PureEnsemble(((1.0, ket(1, 0)),))
    with pytest.raises(InvalidEnsemble):
        PureEnsemble.of(1.5, ket(1, 0), ket(0, 1))


def test_orthogonal_kets_are_perfectly_distinguishable():
    r = min_error_probability(PureEnsemble.of(0.3, ket(1, 0), ket(0, 1)))
    assert r.error_probability == 0.0


def test_identical_kets_guess_the_likelier():
    r = min_error_probability(PureEnsemble.of(0.3, ket(1, 1), ket(1, 1)))
    assert_allclose(r.error_probability, 0.3, atol=1e-15)


@pytest.mark.parametrize("theta", np.linspace(0, math.pi / 4, 7))
def test_cos_sin_family(theta):
    ens = cos_sin_ensemble(theta)
    r = min_error_probability(ens)
    assert_allclose(r.error_probability, math.sin(theta) ** 2, atol=1e-12)
    assert_allclose(error_ceiling_check(ens).slack, 0.0, atol=1e-9)
    if theta < math.pi / 4 - 1e-9:
        # the optimal measurement is along the generating basis
        assert_allclose(abs(r.optimal_projector_bloch[2]), 1.0, atol=1e-9)


@given(st.floats(0.0, 1.0), kets(), kets())
def test_error_matches_helstrom_and_projector(p1, a, b):
    ens = PureEnsemble.of(p1, a, b)
    r = min_error_probability(ens)
    assert 0.0 <= r.error_probability <= min(p1, 1 - p1) + 1e-12
    assert_allclose(r.error_probability, helstrom_error(ens), atol=1e-10)
    assert_allclose(1 - r.success_with_projector(ens), r.error_probability, atol=1e-10)


@given(st.floats(1e-6, 1 - 1e-6), kets(), kets())
def test_error_ceiling_holds(p1, a, b):
    r = error_ceiling_check(PureEnsemble.of(p1, a, b))
    assert not r.violated
    assert r.extras["mixedness_form"] <= 0.5 + 1e-9


@given(states(), bases())
def test_ensemble_round_trip_and_error_equals_coherence(rho, basis):
    try:
        ens = ensemble_from_state(rho, basis)
    except DegenerateWeight:
        assume(False)
    assert_allclose(state_from_ensemble(ens).matrix, rho.matrix, atol=1e-10)
    c, pe = coherence_error_pair(rho, basis)
    assert_allclose(pe, c, atol=1e-8)


def test_degenerate_weight():
    rho = QubitState.from_bloch([0, 0, 1])
    with pytest.raises(DegenerateWeight):
        ensemble_from_state(rho, COMPUTATIONAL)
    assert coherence_error_pair(rho, COMPUTATIONAL) == (0.0, 0.0)


@given(st.floats(0.05, 0.95), kets(), kets())
def test_generating_basis_reproduces_weights(p1, a, b):
    ens = PureEnsemble.of(p1, a, b)
    assume(overlap2(a, b) < 1 - 1e-6)
    basis = generating_basis(ens)
    assume(basis is not None)
    rho = state_from_ensemble(ens)
    d = geometric_coherence(rho, basis).basis_diagonals
    assert_allclose(sorted(d), sorted(ens.weights), atol=1e-7)


def test_generating_basis_rank_deficient():
    assert generating_basis(PureEnsemble.of(0.5, ket(1, 1), ket(1, 1))) is None
