"""Wigner kernels and Wigner-function evaluators.

The hybrid Wigner function is the expectation of the tensor product of two
kernels: an Euler-angle qubit kernel (1/2)(1 - sqrt(3) n.sigma) and the
displaced-parity oscillator kernel (2/pi) D(beta) P D(beta)^dag.  For states
stored as coherent dyads, both kernel expectations are available in closed
form, which is what this module evaluates; the number-basis oracle in
:mod:`hybridwigner.fock` provides the brute-force cross-check.

All evaluators broadcast over numpy arrays in ``beta``.
"""

from __future__ import annotations

import math

import numpy as np

from .dynamics import alpha_t
from .errors import DomainError
from .states import (
    Cat,
    Coherent,
    HybridDyadState,
    PhasePoint,
    ScenarioParams,
    Thermal,
    cat_normalization,
)

__all__ = [
    "qubit_kernel_matrix",
    "qubit_kernel_element",
    "boson_kernel_dyad",
    "wigner_dyadic",
    "qubit_wigner_pure",
    "wigner_closed_form",
    "reduced_wigner_branch",
]

SQRT3 = math.sqrt(3.0)


def qubit_kernel_matrix(theta: float, phi: float) -> np.ndarray:
    """The 2x2 qubit kernel Delta_q(theta, phi).

    Equal to (1/2)(1 - sqrt(3) n.sigma) with the unit vector n obtained by
    rotating the z axis through the Euler angles; the third Euler angle
    commutes with the parity-like operator and drops out.
    """
    ct, st = math.cos(theta), math.sin(theta)
    off = 0.5 * SQRT3 * st * np.exp(1j * phi)
    return np.array(
        [
            [0.5 * (1.0 - SQRT3 * ct), off],
            [np.conj(off), 0.5 * (1.0 + SQRT3 * ct)],
        ],
        dtype=complex,
    )


def qubit_kernel_element(i: int, j: int, theta: float, phi: float) -> complex:
    """Matrix element <i| Delta_q(theta, phi) |j>."""
    if i not in (0, 1) or j not in (0, 1):
        raise DomainError("kernel indices must be 0 or 1")
    return complex(qubit_kernel_matrix(theta, phi)[i, j])


def boson_kernel_dyad(ket_amp: complex, bra_amp: complex, beta):
    """Closed-form <bra| (2/pi) D(beta) P D(beta)^dag |ket> for coherent labels.

    Gaussian in the labels; for ket = bra = a it reduces to
    (2/pi) exp(-2 |beta - a|**2).
    """
    a = complex(ket_amp)
    b = complex(bra_amp)
    beta = np.asarray(beta, dtype=complex)
    # D^dag(beta)|a> = phase1 |a - beta>;  parity flips the label;
    # D(beta)|beta - a> = phase2 |2 beta - a>
    phase1 = np.exp((np.conj(beta) * a - beta * np.conj(a)) / 2.0)
    shifted = beta - a
    phase2 = np.exp((beta * np.conj(shifted) - np.conj(beta) * shifted) / 2.0)
    final = 2.0 * beta - a
    overlap = np.exp(
        -0.5 * np.abs(final) ** 2
        - 0.5 * abs(b) ** 2
        + np.conj(b) * final
    )
    value = (2.0 / np.pi) * phase1 * phase2 * overlap
    if value.ndim == 0:
        return complex(value)
    return value


def wigner_dyadic(state: HybridDyadState, p: PhasePoint) -> float:
    """Hybrid Wigner value of a dyadic state, assembled term by term.

    Raises :class:`HermiticityViolation` when the state lacks conjugate
    partners; the imaginary residue of the sum is asserted below 1e-10 and
    discarded.
    """
    state.check_hermitian()
    delta_q = qubit_kernel_matrix(p.theta, p.phi)
    total = 0.0 + 0.0j
    for c, q, b in state.terms:
        total += c * delta_q[q.bra_index, q.ket_index] * boson_kernel_dyad(
            b.ket_amp, b.bra_amp, p.beta
        )
    if abs(total.imag) > 1e-10:
        raise AssertionError(
            f"Wigner value has imaginary residue {total.imag:.3e} on a "
            "Hermitian state"
        )
    return total.real


def qubit_wigner_pure(alpha: float, chi: float, theta: float, phi: float) -> float:
    """Wigner function of the pure qubit sqrt(alpha)|0> + e^{i chi} sqrt(1-alpha)|1>.

    Closed form of the kernel trace:
    sqrt(3 alpha (1-alpha)) sin(theta) cos(chi + phi)
    + sqrt(3) (1 - 2 alpha)/2 cos(theta) + 1/2.
    """
    if not 0.0 <= alpha <= 1.0:
        raise DomainError("alpha must lie in [0, 1]")
    return (
        math.sqrt(3.0 * alpha * (1.0 - alpha)) * math.sin(theta) * math.cos(chi + phi)
        + 0.5 * SQRT3 * (1.0 - 2.0 * alpha) * math.cos(theta)
        + 0.5
    )


def _gauss(z, width: float = 1.0):
    """exp(-2 |z|**2 / width), broadcasting over z."""
    return np.exp(-2.0 * np.abs(z) ** 2 / width)


def _coherent_hybrid_w(gamma, lam, omega_t, theta, phi, beta):
    a_t = alpha_t(lam, omega_t)
    g_t = np.exp(-1j * omega_t) * complex(gamma)
    ct, st = np.cos(theta), np.sin(theta)
    cross_phase = phi + 4.0 * np.imag(np.conj(a_t) * beta)
    return (
        (1.0 - SQRT3 * ct) * _gauss(beta - a_t - g_t)
        + (1.0 + SQRT3 * ct) * _gauss(beta + a_t - g_t)
        + 2.0 * SQRT3 * st * _gauss(beta - g_t) * np.cos(cross_phase)
    ) / (2.0 * np.pi)


def _thermal_hybrid_w(nbar, lam, omega_t, theta, phi, beta):
    a_t = alpha_t(lam, omega_t)
    width = 2.0 * nbar + 1.0
    ct, st = np.cos(theta), np.sin(theta)
    cross_phase = phi + 4.0 * np.imag(np.conj(a_t) * beta)
    return (
        (1.0 - SQRT3 * ct) * _gauss(beta - a_t, width)
        + (1.0 + SQRT3 * ct) * _gauss(beta + a_t, width)
        + 2.0 * SQRT3 * st * _gauss(beta, width) * np.cos(cross_phase)
    ) / (2.0 * np.pi * width)


def _cat_envelopes(gamma, lam, omega_t, beta):
    """The three interference envelopes of the evolved cat state.

    Returns (minus-branch, plus-branch, coherence) envelopes, i.e. the sums
    of Gaussians multiplying (1 - sqrt(3) cos)/2, (1 + sqrt(3) cos)/2, and
    the sin(theta) coherence line.
    """
    a_t = alpha_t(lam, omega_t)
    g = complex(gamma)
    g_t = np.exp(-1j * omega_t) * g
    phase_ag = 4.0 * np.imag(np.conj(a_t) * np.conj(g))
    phase_gb = 4.0 * np.imag(np.conj(g_t) * beta)
    env_minus = (
        _gauss(beta - a_t - g_t)
        + _gauss(beta - a_t + g_t)
        + 2.0 * _gauss(beta - a_t) * np.cos(phase_ag + phase_gb)
    )
    env_plus = (
        _gauss(beta + a_t - g_t)
        + _gauss(beta + a_t + g_t)
        + 2.0 * _gauss(beta + a_t) * np.cos(phase_ag - phase_gb)
    )
    env_coh = (
        _gauss(beta - g_t) + _gauss(beta + g_t)
        + 2.0 * _gauss(beta) * np.cos(phase_gb)
    )
    return env_minus, env_plus, env_coh


def _cat_hybrid_w(gamma, lam, omega_t, theta, phi, beta):
    a_t = alpha_t(lam, omega_t)
    norm = cat_normalization(gamma)
    ct, st = np.cos(theta), np.sin(theta)
    env_m, env_p, env_c = _cat_envelopes(gamma, lam, omega_t, beta)
    cross_phase = phi + 4.0 * np.imag(np.conj(a_t) * beta)
    return (
        0.5 * (1.0 - SQRT3 * ct) * env_m
        + 0.5 * (1.0 + SQRT3 * ct) * env_p
        + SQRT3 * st * np.cos(cross_phase) * env_c
    ) / (norm * np.pi)


def wigner_closed_form(scenario: ScenarioParams, omega_t: float, p: PhasePoint):
    """Hybrid Wigner function of the evolved state, per scenario family."""
    fam = scenario.family
    args = (scenario.lam, omega_t, p.theta, p.phi, p.beta)
    if isinstance(fam, Coherent):
        return float(_coherent_hybrid_w(fam.gamma, *args))
    if isinstance(fam, Thermal):
        return float(_thermal_hybrid_w(fam.nbar, *args))
    if isinstance(fam, Cat):
        return float(_cat_hybrid_w(fam.gamma, *args))
    raise DomainError(f"unknown scenario family {fam!r}")


def reduced_wigner_branch(
    scenario: ScenarioParams, branch: int, omega_t: float, beta
):
    """Wigner function of one qubit-conditioned branch of the oscillator state.

    Branch 1 is conditioned on |0>, branch 2 on |1>.  Normalized so the
    phase-plane integral is 1 (coherent-state peak value 2/pi).
    """
    if branch not in (1, 2):
        raise DomainError("branch must be 1 or 2")
    sign = 1.0 if branch == 1 else -1.0
    a_t = sign * alpha_t(scenario.lam, omega_t)
    fam = scenario.family
    beta = np.asarray(beta, dtype=complex)
    if isinstance(fam, Coherent):
        g_t = np.exp(-1j * omega_t) * complex(fam.gamma)
        out = (2.0 / np.pi) * _gauss(beta - a_t - g_t)
    elif isinstance(fam, Thermal):
        width = 2.0 * fam.nbar + 1.0
        out = (2.0 / (np.pi * width)) * _gauss(beta - a_t, width)
    elif isinstance(fam, Cat):
        env_m, env_p, _ = _cat_envelopes(fam.gamma, scenario.lam, omega_t, beta)
        env = env_m if branch == 1 else env_p
        out = 2.0 / (cat_normalization(fam.gamma) * np.pi) * env
    else:
        raise DomainError(f"unknown scenario family {fam!r}")
    if out.ndim == 0:
        return float(out)
    return out
