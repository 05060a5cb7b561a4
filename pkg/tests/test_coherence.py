import math

import numpy as np
import pytest
from hypothesis import given, settings
from numpy.testing import assert_allclose

from geocoherence.coherence import (
    coherence_radicand_textbook,
    fidelity,
    geometric_coherence,
    geometric_coherence_oracle,
    pure_state_coherence,
)
from geocoherence.qubit import (
    COMPUTATIONAL,
    HADAMARD,
    QubitState,
    ket,
    maximally_coherent_mixed,
)
from geocoherence.tradeoffs import purity_ceiling

from strategies import bases, kets, states


def test_incoherent_states_have_zero_coherence():
    assert geometric_coherence(QubitState.from_bloch([0, 0, 0.7]), COMPUTATIONAL).value == 0.0
    assert geometric_coherence(QubitState.maximally_mixed(), HADAMARD).value == 0.0


def test_plus_state_is_maximally_coherent():
    rho = QubitState.from_ket(ket(1, 1))
    assert_allclose(geometric_coherence(rho, COMPUTATIONAL).value, 0.5, atol=1e-15)


@pytest.mark.parametrize("q", np.linspace(0, 1, 11))
def test_coherent_mixed_family_closed_form(q):
    c = geometric_coherence(maximally_coherent_mixed(q), COMPUTATIONAL)
    assert_allclose(c.value, (1 - math.sqrt(1 - q * q)) / 2, atol=1e-15)
    assert_allclose(c.basis_diagonals, [0.5, 0.5])


@given(states(), bases())
def test_coherence_bounded_and_basis_label_free(rho, basis):
    c = geometric_coherence(rho, basis).value
    assert 0.0 <= c <= 0.5
    assert c == geometric_coherence(rho, basis.swapped()).value


@given(states(), bases())
def test_stable_radicand_matches_textbook(rho, basis):
    d = geometric_coherence(rho, basis).basis_diagonals
    stable = (d[0] - d[1]) ** 2 + 4 * np.linalg.det(rho.matrix).real
    assert_allclose(stable, coherence_radicand_textbook(rho, basis), atol=1e-12)


@given(kets(), bases())
def test_pure_state_shortcut(psi, basis):
    rho = QubitState.from_ket(psi)
    assert_allclose(geometric_coherence(rho, basis).value, pure_state_coherence(psi, basis), atol=1e-8)


@given(states(), bases())
def test_coherence_is_unitarily_covariant(rho, basis):
    u = np.array([[1, 1j], [1j, 1]]) / math.sqrt(2)
    moved = QubitState(u @ rho.matrix @ u.conj().T)
    assert_allclose(
        geometric_coherence(moved, basis.transformed(u)).value,
        geometric_coherence(rho, basis).value,
        atol=1e-10,
    )


@given(states(), states())
def test_fidelity_properties(rho, sigma):
    f = fidelity(rho, sigma)
    assert 0.0 <= f <= 1.0
    assert_allclose(f, fidelity(sigma, rho), atol=1e-7)


def test_fidelity_of_pure_states_is_overlap():
    a, b = ket(1, 0), ket(1, 1)
    assert_allclose(fidelity(QubitState.from_ket(a), QubitState.from_ket(b)), 0.5, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(states(), bases())
def test_oracle_agrees_with_closed_form(rho, basis):
    assert_allclose(geometric_coherence_oracle(rho, basis), geometric_coherence(rho, basis).value, atol=1e-6)


@given(states(), bases())
def test_coherence_below_purity_ceiling(rho, basis):
    from geocoherence.qubit import purity

    assert geometric_coherence(rho, basis).value <= purity_ceiling(purity(rho)) + 1e-12
