"""Acceptance gate: one test per headline claim, at the stated tolerance.

Each test emits a single pass/fail line via pytest -v.  The sweep fixtures are
session-scoped because the three full time sweeps dominate the runtime.
"""

import math

import numpy as np
import pytest

from hybridwigner.cli import SweepConfig, run_sweep
from hybridwigner.dynamics import evolve_dyadic
from hybridwigner.fidelity import (
    build_sigma_pair,
    fidelity_closed_form,
    separability_commutator_residual,
    uhlmann_fidelity,
)
from hybridwigner.fock import (
    TruncationSpec,
    auto_cutoff,
    dyadic_to_fock,
    evolve_oracle,
    initial_hybrid_dm,
    wigner_oracle,
)
from hybridwigner.kernels import wigner_closed_form, wigner_dyadic
from hybridwigner.negativity import (
    PURE_QUBIT_VOLUME,
    QuadratureSpec,
    auto_beta_radius,
    hybrid_profile,
    mixture_profile,
    negativity_volume_boson,
    negativity_volume_profile,
    negativity_volume_qubit,
    normalization_integral,
    product_profile,
    separable_bound_check,
)
from hybridwigner.kernels import reduced_wigner_branch
from hybridwigner.states import (
    Cat,
    Coherent,
    PhasePoint,
    ScenarioParams,
    Thermal,
    initial_dyadic_state,
)

LAM = 0.1

FIG2 = SweepConfig(scenario=ScenarioParams(LAM, Coherent(0.0)),
                   t_max_over_pi=4.0, t_steps=161)
FIG3 = SweepConfig(scenario=ScenarioParams(LAM, Thermal(3.0)),
                   t_max_over_pi=4.0, t_steps=161,
                   quad=QuadratureSpec(rel_tolerance=1e-6))
FIG4 = SweepConfig(scenario=ScenarioParams(LAM, Cat(1.0)),
                   t_max_over_pi=4.0, t_steps=81)


@pytest.fixture(scope="session")
def fig2_rows():
    return run_sweep(FIG2)


@pytest.fixture(scope="session")
def fig3_rows():
    return run_sweep(FIG3)


@pytest.fixture(scope="session")
def fig4_rows():
    return run_sweep(FIG4)


def _by_x(rows):
    return {round(r.omega_t_over_pi, 10): r for r in rows}


def _check_period_structure(rows, tol_period=2e-4, tol_sym=2e-4):
    """Endpoint values, strict interior excess, periodicity, and symmetry."""
    lookup = _by_x(rows)
    for x in (0.0, 2.0, 4.0):
        assert abs(lookup[x].negativity_volume - PURE_QUBIT_VOLUME) < 1e-4
    for r in rows:
        x = r.omega_t_over_pi
        if min(abs(x - 0.0), abs(x - 2.0), abs(x - 4.0)) > 1e-12:
            assert r.negativity_volume > r.critical_value, f"x={x}"
    for r in rows:
        x = r.omega_t_over_pi
        if x <= 2.0 + 1e-12:
            partner = lookup.get(round(x + 2.0, 10))
            assert partner is not None
            assert abs(partner.negativity_volume - r.negativity_volume) < tol_period
    for center in (1.0, 3.0):
        for r in rows:
            d = r.omega_t_over_pi - center
            if -1.0 <= d <= 0.0:
                partner = lookup.get(round(center - d, 10))
                assert partner is not None
                assert abs(partner.negativity_volume - r.negativity_volume) < tol_sym


def test_pure_qubit_volume_is_universal_constant():
    rng = np.random.default_rng(2024)
    for _ in range(20):
        alpha = rng.uniform(0.0, 1.0)
        chi = rng.uniform(0.0, 2 * math.pi)
        r = negativity_volume_qubit(alpha, chi)
        assert abs(r.volume - PURE_QUBIT_VOLUME) < 1e-6


def test_hybrid_wigner_normalization():
    spec = QuadratureSpec()
    for fam in (Coherent(1.0), Thermal(3.0), Cat(1.0)):
        sc = ScenarioParams(LAM, fam)
        radius = auto_beta_radius(sc)
        for omega_t in (0.0, 1.0, math.pi, 2 * math.pi):
            total = normalization_integral(hybrid_profile(sc, omega_t),
                                           radius, spec)
            assert abs(total - 1.0) < 2e-4, (fam, omega_t)


def test_fig2_coherent_sweep_reproduction(fig2_rows):
    _check_period_structure(fig2_rows)


def test_fig3_thermal_sweep_reproduction(fig2_rows, fig3_rows):
    _check_period_structure(fig3_rows)
    peak2 = max(r.negativity_volume for r in fig2_rows)
    peak3 = max(r.negativity_volume for r in fig3_rows)
    assert peak3 < peak2


def test_fig4_cat_sweep_reproduction(fig4_rows):
    for r in fig4_rows:
        x = r.omega_t_over_pi
        expected = min(abs(x - 0.0), abs(x - 2.0), abs(x - 4.0)) > 1e-12
        assert r.witnessed_entangled == expected, f"x={x}"
    period = [r.critical_value for r in fig4_rows if r.omega_t_over_pi <= 2.0]
    spread = max(period) - min(period)
    assert spread < 0.05 * (sum(period) / len(period))


def test_fidelity_closed_forms_match_oracle():
    rng = np.random.default_rng(77)
    for fam in (Coherent(1.0), Thermal(3.0), Cat(1.0)):
        sc = ScenarioParams(LAM, fam)
        spec = TruncationSpec(auto_cutoff(sc))
        for omega_t in rng.uniform(0.0, 4 * math.pi, 50):
            sigma0, sigma1 = build_sigma_pair(sc, omega_t, spec)
            closed = fidelity_closed_form(sc, omega_t).value
            assert abs(closed - uhlmann_fidelity(sigma0, sigma1)) < 1e-6


def test_criterion_concordance_fidelity_vs_negativity():
    grid = np.linspace(0.0, 4 * math.pi, 64)
    for fam in (Coherent(0.0), Thermal(3.0), Cat(1.0)):
        # the thermal excess over the bound shrinks fastest near omega_t = 2 pi n,
        # so its quadrature error budget must be tighter than the default
        quad = (QuadratureSpec(rel_tolerance=1e-6)
                if isinstance(fam, Thermal) else QuadratureSpec())
        sc = ScenarioParams(LAM, fam)
        for omega_t in grid:
            from hybridwigner.negativity import (
                critical_value, negativity_volume_hybrid)
            r = negativity_volume_hybrid(sc, omega_t, quad)
            crit = critical_value(sc, omega_t, quad)
            witnessed = r.volume > crit + r.error_estimate
            fidelity_entangled = 1.0 - fidelity_closed_form(sc, omega_t).value > 1e-6
            assert witnessed == fidelity_entangled, (fam, omega_t / math.pi)


def _component_boson(rng, radius):
    """A random coherent or even-cat oscillator state: (Wigner fn, volume)."""
    g = complex(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2))
    if rng.uniform() < 0.5:
        sc = ScenarioParams(0.0, Coherent(g))
    else:
        sc = ScenarioParams(0.0, Cat(g))
    w = lambda beta: reduced_wigner_branch(sc, 1, 0.0, beta)
    vol = negativity_volume_boson(
        sc, 1, 0.0, QuadratureSpec(beta_nodes_per_axis=256, beta_radius=radius))
    return w, vol


def test_separable_bound_on_randomized_mixtures():
    rng = np.random.default_rng(4096)
    # cat fringes need a denser base grid than the default before the
    # node-doubling error estimates become trustworthy at the 1e-5 scale
    spec = QuadratureSpec(beta_nodes_per_axis=256)
    radius = 1.2 + 4.5
    for trial in range(100):
        n_parts = 1 if trial < 10 else int(rng.integers(1, 5))
        weights = rng.dirichlet(np.ones(n_parts))
        profiles, qubit_vols, boson_vols, boson_errs = [], [], [], []
        for _ in range(n_parts):
            alpha_q = rng.uniform(0.0, 1.0)
            chi_q = rng.uniform(0.0, 2 * math.pi)
            w, vol = _component_boson(rng, radius)
            profiles.append(product_profile(alpha_q, chi_q, w))
            qubit_vols.append(PURE_QUBIT_VOLUME)
            boson_vols.append(vol.volume)
            boson_errs.append(vol.error_estimate)
        hybrid = negativity_volume_profile(
            mixture_profile(weights, profiles), radius, spec)
        # combined quadrature error of the bound itself
        slack = (2 / math.sqrt(3)) * sum(
            w * e for w, e in zip(weights, boson_errs)) + 2e-5
        assert separable_bound_check(
            weights, qubit_vols, boson_vols, hybrid, slack=slack), f"trial={trial}"
        if n_parts == 1:
            # single products saturate the bound exactly
            bound = (2 / math.sqrt(3)) * boson_vols[0] + PURE_QUBIT_VOLUME
            assert abs(hybrid.volume - bound) < \
                hybrid.error_estimate + boson_errs[0] + 1e-4


def test_oracle_coherence_three_way_and_cutoff_stability():
    rng = np.random.default_rng(555)
    times = (0.8, math.pi, 2.4, 5.1)
    for fam in (Coherent(1.0), Cat(1.0), Thermal(3.0)):
        sc = ScenarioParams(LAM, fam)
        # headroom beyond the state's own occupation: the displaced-parity
        # kernel at the sampled |beta| up to ~3.5 reaches much higher levels
        spec = TruncationSpec(auto_cutoff(sc) + 70)
        for omega_t in times:
            rho = evolve_oracle(initial_hybrid_dm(sc, spec), LAM, omega_t, spec)
            dyadic = None
            if not isinstance(fam, Thermal):
                dyadic = evolve_dyadic(initial_dyadic_state(sc), LAM, omega_t)
            for _ in range(17):
                p = PhasePoint(rng.uniform(0, math.pi),
                               rng.uniform(0, 2 * math.pi),
                               complex(rng.normal(0, 1.2), rng.normal(0, 1.2)))
                closed = wigner_closed_form(sc, omega_t, p)
                oracle = wigner_oracle(rho, p, spec)
                assert abs(closed - oracle) < 1e-6
                if dyadic is not None:
                    assert abs(wigner_dyadic(dyadic, p) - oracle) < 1e-6

        # every oracle quantity stable to 1e-8 under cutoff doubling
        double = TruncationSpec(2 * spec.cutoff)
        omega_t = 1.3
        p = PhasePoint(1.0, 0.5, 0.3 - 0.4j)
        vals = []
        for s in (spec, double):
            rho = evolve_oracle(initial_hybrid_dm(sc, s), LAM, omega_t, s)
            s0, s1 = build_sigma_pair(sc, omega_t, s)
            vals.append((
                wigner_oracle(rho, p, s),
                uhlmann_fidelity(s0, s1),
                separability_commutator_residual(sc, omega_t, s),
            ))
        for a, b in zip(*vals):
            assert abs(a - b) < 1e-8
