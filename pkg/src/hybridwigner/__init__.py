"""Generalized Wigner functions and entanglement witnesses for a
gravitationally coupled qubit-oscillator system."""

from .states import (
    PhasePoint,
    QubitDyad,
    CoherentDyad,
    HybridDyadState,
    Coherent,
    Thermal,
    Cat,
    ScenarioParams,
    coherent_overlap,
    cat_normalization,
    initial_dyadic_state,
)
from .kernels import (
    qubit_kernel_matrix,
    qubit_kernel_element,
    boson_kernel_dyad,
    wigner_dyadic,
    qubit_wigner_pure,
    wigner_closed_form,
    reduced_wigner_branch,
)
from .dynamics import (
    alpha_t,
    c_t,
    PhysicalSetup,
    EvolutionParams,
    coupling_from_physical,
    nbar_from_temperature,
    evolve_dyadic,
)
from .negativity import (
    QuadratureSpec,
    NegativityResult,
    Verdict,
    PURE_QUBIT_VOLUME,
    hybrid_profile,
    dyadic_profile,
    product_profile,
    mixture_profile,
    auto_beta_radius,
    negativity_volume_profile,
    negativity_volume_hybrid,
    negativity_volume_qubit,
    negativity_volume_qubit_dm,
    negativity_volume_boson,
    normalization_integral,
    critical_value,
    entanglement_verdict,
    separable_bound_check,
)
from .fock import (
    FockOperator,
    TruncationSpec,
    ladder_ops,
    displacement,
    parity,
    hybrid_hamiltonian,
    evolve_oracle,
    wigner_oracle,
    thermal_dm,
    coherent_state_vector,
    dyadic_to_fock,
    initial_hybrid_dm,
    initial_oscillator_dm,
    auto_cutoff,
    check_density_matrix,
)
from .fidelity import (
    FidelityResult,
    ENTANGLEMENT_TOL,
    fidelity_closed_form,
    build_sigma_pair,
    uhlmann_fidelity,
    separability_commutator_residual,
)
from .errors import (
    DomainError,
    HermiticityViolation,
    QuadratureNonConvergence,
    CutoffInsufficient,
    NotDensityMatrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
