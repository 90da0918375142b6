import cmath
import math

import numpy as np
import pytest

from hybridwigner.dynamics import (
    EvolutionParams,
    PhysicalSetup,
    alpha_t,
    c_t,
    coupling_from_physical,
    evolve_dyadic,
    nbar_from_temperature,
)
from hybridwigner.errors import DomainError
from hybridwigner.fock import (
    TruncationSpec,
    dyadic_to_fock,
    evolve_oracle,
    initial_hybrid_dm,
)
from hybridwigner.states import Cat, Coherent, ScenarioParams, initial_dyadic_state


def test_alpha_t_values():
    assert alpha_t(0.1, 0.0) == 0.0
    assert alpha_t(0.1, 2 * math.pi) == pytest.approx(0.0, abs=1e-15)
    # at omega_t = pi the displacement reaches its largest magnitude, 2 lam
    assert abs(alpha_t(0.1, math.pi)) == pytest.approx(0.2)
    assert alpha_t(0.25, math.pi) == pytest.approx(-0.5 + 0.0j)


def test_c_t_monotone_nonnegative():
    ts = np.linspace(0.0, 20.0, 400)
    vals = [c_t(0.3, t) for t in ts]
    assert vals[0] == 0.0
    assert all(b >= a - 1e-15 for a, b in zip(vals, vals[1:]))


def test_evolution_params_domain():
    with pytest.raises(DomainError):
        EvolutionParams(0.1, -1.0)


def test_coupling_from_physical_scaling():
    setup = PhysicalSetup(
        grav_const=6.674e-11,
        mass_oscillator=1e-12,
        mass_particle=1e-12,
        separation=1e-4,
        distance=1e-4,
        omega=0.1,
    )
    g, lam = coupling_from_physical(setup)
    assert g > 0
    assert lam == pytest.approx(g / setup.omega)
    # doubling the particle mass doubles g
    heavier = PhysicalSetup(
        grav_const=6.674e-11,
        mass_oscillator=1e-12,
        mass_particle=2e-12,
        separation=1e-4,
        distance=1e-4,
        omega=0.1,
    )
    g2, _ = coupling_from_physical(heavier)
    assert g2 == pytest.approx(2 * g)


def test_coupling_degenerate_geometry():
    with pytest.raises(DomainError):
        coupling_from_physical(PhysicalSetup(
            grav_const=1.0, mass_oscillator=1.0, mass_particle=1.0,
            separation=0.0, distance=0.0, omega=1.0, hbar=1.0))


def test_nbar_from_temperature():
    assert nbar_from_temperature(0.0, 1.0) == 0.0
    # natural units: nbar = T / (2 omega)
    assert nbar_from_temperature(6.0, 1.0, hbar=1.0, k_b=1.0) == pytest.approx(3.0)
    with pytest.raises(DomainError):
        nbar_from_temperature(-1.0, 1.0)


def test_evolve_identity_at_t0():
    state = initial_dyadic_state(ScenarioParams(0.1, Coherent(1.0)))
    out = evolve_dyadic(state, 0.1, 0.0)
    for (c0, q0, b0), (c1, q1, b1) in zip(state.terms, out.terms):
        assert c1 == pytest.approx(c0)
        assert q0 == q1
        assert complex(b1.ket_amp) == pytest.approx(complex(b0.ket_amp))


def test_evolve_preserves_trace_and_hermiticity():
    for fam in (Coherent(1.0 + 0.5j), Cat(0.8)):
        state = initial_dyadic_state(ScenarioParams(0.15, fam))
        for omega_t in (0.7, math.pi, 5.0):
            out = evolve_dyadic(state, 0.15, omega_t)
            out.validate(tol=1e-10)


@pytest.mark.parametrize("fam,lam", [(Coherent(1.0), 0.1), (Cat(1.0), 0.1)])
def test_evolve_matches_fock_oracle(fam, lam):
    scenario = ScenarioParams(lam, fam)
    spec = TruncationSpec(48)
    rho0 = initial_hybrid_dm(scenario, spec)
    for omega_t in (0.9, math.pi, 2.6):
        oracle = evolve_oracle(rho0, lam, omega_t, spec)
        dyadic = dyadic_to_fock(
            evolve_dyadic(initial_dyadic_state(scenario), lam, omega_t), spec)
        assert np.max(np.abs(oracle.entries - dyadic.entries)) < 1e-8
