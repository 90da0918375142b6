"""Fidelity criterion on the conditionally evolved oscillator states.

The two qubit branches drag the oscillator through opposite conditional
displacements; the initial product state stays separable exactly when the two
conditional states sigma_0 and sigma_1 coincide, i.e. when their fidelity is 1.
This module builds the sigma pair in the number basis, evaluates the fidelity
both in closed form and from the matrices, and exposes the equivalent
commutator form of the criterion.

Fidelity convention: ``uhlmann_fidelity`` returns Tr sqrt(sqrt(s1) s0 sqrt(s1))
(not its square).  For a pair of pure states this is |<s0|s1>|, and it is the
quantity the closed forms below evaluate; the criterion F = 1 iff separable is
insensitive to the choice.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import alpha_t
from .errors import DomainError
from .fock import (
    FockOperator,
    TruncationSpec,
    auto_cutoff,
    check_density_matrix,
    hybrid_hamiltonian,
    initial_oscillator_dm,
    _displacement_matrix,
)
from .states import Cat, Coherent, ScenarioParams, Thermal, cat_normalization

__all__ = [
    "FidelityResult",
    "ENTANGLEMENT_TOL",
    "fidelity_closed_form",
    "build_sigma_pair",
    "uhlmann_fidelity",
    "separability_commutator_residual",
]

#: F differs from 1 meaningfully only beyond this tolerance.
ENTANGLEMENT_TOL = 1e-6


@dataclass(frozen=True)
class FidelityResult:
    """A fidelity value together with the criterion verdict F != 1."""

    value: float
    entangled: bool

    def __post_init__(self):
        if not -1e-10 <= self.value <= 1.0 + 1e-10:
            raise DomainError(f"fidelity {self.value} outside [0, 1]")


def fidelity_closed_form(scenario: ScenarioParams, omega_t: float) -> FidelityResult:
    """F(sigma_0, sigma_1) of the evolved conditional pair, per family.

    Coherent: exp(-2 |alpha_t|**2), independent of gamma.
    Thermal:  exp(-2 |alpha_t|**2 / (2 nbar + 1)).
    Cat:      (1/N) |e^{-2|a-g|^2} + e^{-2|a+g|^2}
                     + 2 e^{-2|a|^2} cos(4 Im[a* g*])|,
              with a = alpha_t, g the rotated cat amplitude, N the cat norm.
    """
    if omega_t < 0:
        raise DomainError("omega_t must be nonnegative")
    a_t = alpha_t(scenario.lam, omega_t)
    mod2 = abs(a_t) ** 2
    fam = scenario.family
    if isinstance(fam, Coherent):
        value = math.exp(-2.0 * mod2)
    elif isinstance(fam, Thermal):
        value = math.exp(-2.0 * mod2 / (2.0 * fam.nbar + 1.0))
    elif isinstance(fam, Cat):
        g = complex(fam.gamma)
        g_t = cmath.exp(-1j * omega_t) * g
        value = abs(
            math.exp(-2.0 * abs(a_t - g_t) ** 2)
            + math.exp(-2.0 * abs(a_t + g_t) ** 2)
            + 2.0 * math.exp(-2.0 * mod2) * math.cos(
                4.0 * (a_t.conjugate() * g.conjugate()).imag)
        ) / cat_normalization(fam.gamma)
    else:
        raise DomainError(f"unknown scenario family {fam!r}")
    value = min(value, 1.0)
    return FidelityResult(value, 1.0 - value > ENTANGLEMENT_TOL)


def build_sigma_pair(
    scenario: ScenarioParams, omega_t: float,
    spec: TruncationSpec | None = None,
) -> tuple[FockOperator, FockOperator]:
    """The two conditionally evolved oscillator states in the number basis.

    sigma_s = R D(z_s) rho_b(0) D(z_s)^dag R^dag with R = exp(-i omega_t n),
    z_0 = -conj(alpha_t), z_1 = +conj(alpha_t); they coincide exactly when
    alpha_t = 0.
    """
    if spec is None:
        spec = TruncationSpec(auto_cutoff(scenario))
    rho0 = initial_oscillator_dm(scenario, spec).entries
    z = alpha_t(scenario.lam, omega_t).conjugate()
    rot = np.exp(-1j * omega_t * np.arange(spec.cutoff))
    out = []
    for z_s in (-z, z):
        d = _displacement_matrix(z_s, spec.cutoff)
        sigma = (rot[:, None] * (d @ rho0 @ d.conj().T)) * rot.conj()[None, :]
        tr = np.trace(sigma).real
        sigma = sigma / tr
        op = FockOperator(spec.cutoff, sigma)
        check_density_matrix(op, tol=1e-8)
        out.append(op)
    return out[0], out[1]


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    evals, evecs = np.linalg.eigh(m)
    evals = np.clip(evals, 0.0, None)
    return (evecs * np.sqrt(evals)) @ evecs.conj().T


def uhlmann_fidelity(rho: FockOperator, sigma: FockOperator) -> float:
    """Tr sqrt(sqrt(sigma) rho sqrt(sigma)); 1 iff the states coincide.

    Square roots by Hermitian eigendecomposition with eigenvalues clamped at
    zero (drift below -1e-10 is rejected as NotDensityMatrix).
    """
    check_density_matrix(rho, tol=1e-8)
    check_density_matrix(sigma, tol=1e-8)
    if rho.entries.shape != sigma.entries.shape:
        raise DomainError("fidelity arguments must share a basis")
    root = _psd_sqrt(sigma.entries)
    evals = np.linalg.eigvalsh(root @ rho.entries @ root)
    return float(np.sqrt(np.clip(evals, 0.0, None)).sum())


def separability_commutator_residual(
    scenario: ScenarioParams, omega_t: float,
    spec: TruncationSpec | None = None,
) -> float:
    """Frobenius norm of [rho_b(0), w(t)] with
    w(t) = exp(+i H_+ t) exp(-i H_- t); zero exactly when the evolved state is
    separable, i.e. when the fidelity of the sigma pair is 1.
    """
    if omega_t < 0:
        raise DomainError("omega_t must be nonnegative")
    if spec is None:
        spec = TruncationSpec(auto_cutoff(scenario))
    n = spec.cutoff
    h = hybrid_hamiltonian(scenario.lam, 1.0, spec).entries
    exps = []
    for block, sign in (((slice(0, n), slice(0, n)), +1.0),
                        ((slice(n, 2 * n), slice(n, 2 * n)), -1.0)):
        evals, evecs = np.linalg.eigh(h[block])
        exps.append((evecs * np.exp(1j * sign * evals * omega_t)) @ evecs.conj().T)
    w = exps[0] @ exps[1]
    rho0 = initial_oscillator_dm(scenario, spec).entries
    comm = rho0 @ w - w @ rho0
    return float(np.linalg.norm(comm))
