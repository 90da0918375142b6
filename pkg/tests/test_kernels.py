import math

import numpy as np
import pytest

from hybridwigner.dynamics import evolve_dyadic
from hybridwigner.errors import DomainError
from hybridwigner.kernels import (
    SQRT3,
    boson_kernel_dyad,
    qubit_kernel_element,
    qubit_kernel_matrix,
    qubit_wigner_pure,
    reduced_wigner_branch,
    wigner_closed_form,
    wigner_dyadic,
)
from hybridwigner.states import (
    Cat,
    Coherent,
    PhasePoint,
    ScenarioParams,
    Thermal,
    initial_dyadic_state,
)


def test_qubit_kernel_structure():
    for theta, phi in ((0.3, 1.0), (2.0, 5.5), (math.pi / 2, 0.0)):
        m = qubit_kernel_matrix(theta, phi)
        assert np.allclose(m, m.conj().T)
        assert np.trace(m).real == pytest.approx(1.0)
        # eigenvalues (1 +- sqrt(3)) / 2 independent of the angles
        evals = sorted(np.linalg.eigvalsh(m))
        assert evals[0] == pytest.approx((1 - SQRT3) / 2)
        assert evals[1] == pytest.approx((1 + SQRT3) / 2)


def test_qubit_kernel_element_domain():
    with pytest.raises(DomainError):
        qubit_kernel_element(2, 0, 0.0, 0.0)


def test_boson_kernel_diagonal_gaussian():
    a = 0.4 - 0.7j
    for beta in (0.0, 0.5 + 0.2j, a):
        val = boson_kernel_dyad(a, a, beta)
        assert val == pytest.approx(
            (2 / math.pi) * math.exp(-2 * abs(beta - a) ** 2))
    # peak value 2/pi at the label
    assert boson_kernel_dyad(a, a, a) == pytest.approx(2 / math.pi)


def test_qubit_wigner_pure_values():
    # |0>: W = (1 - sqrt(3) cos(theta)) / 2
    assert qubit_wigner_pure(1.0, 0.0, 0.0, 0.0) == pytest.approx((1 - SQRT3) / 2)
    assert qubit_wigner_pure(0.0, 0.0, 0.0, 0.0) == pytest.approx((1 + SQRT3) / 2)
    with pytest.raises(DomainError):
        qubit_wigner_pure(1.5, 0.0, 0.0, 0.0)


def test_closed_form_anchor_values():
    # (|0>+|1>)/sqrt2 (x) |0> at t=0, theta=pi/2, phi=0, beta=0:
    # product of the qubit value (1+sqrt3)/2 and the vacuum peak 2/pi
    sc = ScenarioParams(0.1, Coherent(0.0))
    p = PhasePoint(math.pi / 2, 0.0, 0.0)
    val = wigner_closed_form(sc, 0.0, p)
    assert val == pytest.approx((2 + 2 * SQRT3) / (2 * math.pi), rel=1e-12)

    sc_th = ScenarioParams(0.1, Thermal(3.0))
    val_th = wigner_closed_form(sc_th, 0.0, PhasePoint(0.0, 0.0, 0.0))
    # thermal width 2 nbar + 1 = 7: W(0) = 2 / (2 pi 7) * ... = 1/(7 pi)
    assert val_th == pytest.approx(1 / (7 * math.pi), rel=1e-12)


@pytest.mark.parametrize("fam", [Coherent(1.0 + 0.3j), Cat(0.9)])
def test_closed_form_matches_dyadic_engine(fam):
    sc = ScenarioParams(0.12, fam)
    rng = np.random.default_rng(7)
    for omega_t in (0.0, 1.3, math.pi, 4.8):
        state = evolve_dyadic(initial_dyadic_state(sc), sc.lam, omega_t)
        for _ in range(5):
            p = PhasePoint(
                rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi),
                complex(rng.normal(), rng.normal()))
            assert wigner_closed_form(sc, omega_t, p) == pytest.approx(
                wigner_dyadic(state, p), abs=1e-12)


def test_reduced_branches_normalized():
    # integrate each branch over the plane with a trapezoid grid
    x = np.linspace(-8, 8, 401)
    beta = x[:, None] + 1j * x[None, :]
    h = x[1] - x[0]
    for fam in (Coherent(1.0), Thermal(3.0), Cat(1.0)):
        sc = ScenarioParams(0.1, fam)
        for branch in (1, 2):
            w = reduced_wigner_branch(sc, branch, 1.1, beta)
            assert float(np.sum(w)) * h * h == pytest.approx(1.0, abs=1e-6)


def test_reduced_branch_domain():
    with pytest.raises(DomainError):
        reduced_wigner_branch(ScenarioParams(0.1, Coherent(0.0)), 3, 0.0, 0.0)


def test_reduced_branch_peak_values():
    # coherent branch is a displaced vacuum: peak 2/pi at its center
    sc = ScenarioParams(0.1, Coherent(0.0))
    a_t = 0.1 * (np.exp(-1j * math.pi) - 1)
    center = np.exp(-1j * math.pi) * 0 + a_t  # branch 1 center at alpha_t rotated
    val = reduced_wigner_branch(sc, 1, math.pi, center)
    assert val == pytest.approx(2 / math.pi, rel=1e-12)
