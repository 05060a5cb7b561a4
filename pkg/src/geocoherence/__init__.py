"""Geometric coherence of qubit states, its purity ceiling and uncertainty relations."""

from .coherence import (
    CoherenceResult,
    fidelity,
    geometric_coherence,
    geometric_coherence_oracle,
    pure_state_coherence,
)
from .discrimination import (
    DegenerateWeight,
    DiscriminationResult,
    InvalidEnsemble,
    PureEnsemble,
    coherence_error_pair,
    ensemble_from_state,
    error_ceiling_check,
    helstrom_error,
    min_error_probability,
    state_from_ensemble,
)
from .qubit import (
    CIRCULAR,
    COMPUTATIONAL,
    HADAMARD,
    NAMED_BASES,
    TILTED,
    DomainError,
    InvalidBasis,
    InvalidKet,
    InvalidState,
    NonHermitianInput,
    NotPositiveSemidefinite,
    NumericalDomainError,
    OrthonormalBasis,
    PureKet,
    QubitError,
    QubitState,
    eig_hermitian_2x2,
    ket,
    matrix_sqrt_psd,
    maximally_coherent_mixed,
    overlap2,
    purity,
)
from .sampling import SampleConfig, SampleStream, sample
from .tradeoffs import (
    BoundReport,
    IncompatibilityVector,
    ceiling_check,
    ceiling_saturated,
    complementarity_check,
    incompatibility,
    incompatibility_vector,
    mixedness,
    overlap_triple_feasible,
    purity_ceiling,
    three_basis_check,
    three_basis_lower_bound,
    two_basis_check,
    two_basis_lower_bound,
)

__version__ = "0.1.0"
