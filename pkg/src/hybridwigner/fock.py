"""Brute-force number-basis oracle.

Everything here is dense linear algebra on a truncated Fock space: ladder
operators, displacement by matrix exponential, exact-diagonalization time
evolution of the full hybrid Hamiltonian, and Wigner evaluation by tracing
against explicit kernel matrices.  The closed forms elsewhere in the library
are validated against these routines.

Hybrid operators live on qubit (x) oscillator with dimension 2 * cutoff and
qubit-major ordering (index = qubit * cutoff + n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import expm

from .errors import CutoffInsufficient, DomainError, NotDensityMatrix
from .kernels import qubit_kernel_matrix
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
    "FockOperator",
    "TruncationSpec",
    "ladder_ops",
    "displacement",
    "parity",
    "hybrid_hamiltonian",
    "evolve_oracle",
    "wigner_oracle",
    "thermal_dm",
    "coherent_state_vector",
    "dyadic_to_fock",
    "initial_hybrid_dm",
    "initial_oscillator_dm",
    "auto_cutoff",
    "check_density_matrix",
]


@dataclass(frozen=True)
class TruncationSpec:
    """Basis size and the tolerated trace/norm loss past the cutoff."""

    cutoff: int
    leakage_tol: float = 1e-10

    def __post_init__(self):
        if self.cutoff < 8:
            raise DomainError("cutoff must be at least 8")
        if self.leakage_tol > 1e-6:
            raise DomainError("leakage_tol must be at most 1e-6")


@dataclass(frozen=True)
class FockOperator:
    """Dense complex matrix on the truncated basis (oscillator or hybrid)."""

    cutoff: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        object.__setattr__(self, "entries", entries)
        if entries.shape not in ((self.cutoff, self.cutoff),
                                 (2 * self.cutoff, 2 * self.cutoff)):
            raise DomainError(
                f"entries shape {entries.shape} matches neither the oscillator "
                f"({self.cutoff}) nor the hybrid (2x{self.cutoff}) dimension")
        if not np.all(np.isfinite(entries)):
            raise DomainError("entries must be finite")

    @property
    def is_hybrid(self) -> bool:
        return self.entries.shape[0] == 2 * self.cutoff


def check_density_matrix(op: FockOperator, tol: float = 1e-10) -> None:
    """Raise :class:`NotDensityMatrix` unless Hermitian, unit trace, PSD."""
    m = op.entries
    if np.max(np.abs(m - m.conj().T)) > tol:
        raise NotDensityMatrix("matrix is not Hermitian")
    tr = np.trace(m).real
    if abs(tr - 1.0) > max(tol, 1e-8):
        raise NotDensityMatrix(f"trace {tr} differs from 1")
    evals = np.linalg.eigvalsh(m)
    if evals.min() < -1e-10:
        raise NotDensityMatrix(f"negative eigenvalue {evals.min():.3e}")


def ladder_ops(spec: TruncationSpec) -> tuple[FockOperator, FockOperator]:
    """Annihilation and creation operators on the truncated basis."""
    n = spec.cutoff
    a = np.diag(np.sqrt(np.arange(1, n, dtype=float)), k=1).astype(complex)
    return FockOperator(n, a), FockOperator(n, a.conj().T)


def _displacement_matrix(zeta: complex, cutoff: int) -> np.ndarray:
    # built at twice the retained size, then cropped, so truncation error
    # lands outside the kept block
    big = 2 * cutoff
    a = np.diag(np.sqrt(np.arange(1, big, dtype=float)), k=1).astype(complex)
    gen = zeta * a.conj().T - np.conj(zeta) * a
    return expm(gen)[:cutoff, :cutoff]


def displacement(zeta: complex, spec: TruncationSpec) -> FockOperator:
    """D(zeta) = exp(zeta a^dag - conj(zeta) a), cropped to the retained block."""
    d = _displacement_matrix(complex(zeta), spec.cutoff)
    # unitarity must hold on the low-occupation half of the retained block
    col_norms = np.einsum("ij,ij->j", d.conj(), d).real
    err = np.max(np.abs(col_norms[: spec.cutoff // 2] - 1.0))
    if err > max(spec.leakage_tol, 1e-9):
        raise CutoffInsufficient(
            f"displacement |zeta|={abs(zeta):.3f} leaks {err:.2e} at cutoff "
            f"{spec.cutoff}")
    return FockOperator(spec.cutoff, d)


def parity(spec: TruncationSpec) -> FockOperator:
    """diag((-1)^n); the 2/pi kernel prefactor is applied at Wigner assembly."""
    signs = (-1.0) ** np.arange(spec.cutoff)
    return FockOperator(spec.cutoff, np.diag(signs).astype(complex))


def hybrid_hamiltonian(lam: float, omega: float = 1.0,
                       spec: TruncationSpec = TruncationSpec(64)) -> FockOperator:
    """omega a^dag a + sign(qubit) g (a + a^dag), block diagonal in the qubit."""
    n = spec.cutoff
    a, adag = ladder_ops(spec)
    number = (adag.entries @ a.entries).real
    quad = (a.entries + adag.entries).real
    g = lam * omega
    h = np.zeros((2 * n, 2 * n), dtype=complex)
    h[:n, :n] = omega * number + g * quad
    h[n:, n:] = omega * number - g * quad
    return FockOperator(n, h)


@lru_cache(maxsize=32)
def _hybrid_eig(lam: float, cutoff: int):
    h = hybrid_hamiltonian(lam, 1.0, TruncationSpec(cutoff)).entries
    evals, evecs = np.linalg.eigh(h)
    return evals, evecs


def evolve_oracle(rho0: FockOperator, lam: float, omega_t: float,
                  spec: TruncationSpec) -> FockOperator:
    """Conjugate a hybrid density matrix by exp(-i H t), H diagonalized once."""
    if not rho0.is_hybrid:
        raise DomainError("evolve_oracle expects a hybrid density matrix")
    evals, evecs = _hybrid_eig(float(lam), spec.cutoff)
    phases = np.exp(-1j * evals * omega_t)
    u = (evecs * phases) @ evecs.conj().T
    rho = u @ rho0.entries @ u.conj().T
    leak = abs(np.trace(rho).real - np.trace(rho0.entries).real)
    if leak > max(spec.leakage_tol, 1e-9):
        raise CutoffInsufficient(f"evolution trace leakage {leak:.2e}")
    return FockOperator(spec.cutoff, rho)


def _boson_kernel_matrix(beta: complex, cutoff: int) -> np.ndarray:
    d = _displacement_matrix(beta, cutoff)
    signs = (-1.0) ** np.arange(cutoff)
    return (2.0 / np.pi) * (d * signs) @ d.conj().T


def wigner_oracle(rho: FockOperator, p: PhasePoint, spec: TruncationSpec) -> float:
    """Tr[rho Delta_q (x) Delta_b] (hybrid) or Tr[rho Delta_b] (oscillator)."""
    delta_b = _boson_kernel_matrix(complex(p.beta), spec.cutoff)
    if rho.is_hybrid:
        kernel = np.kron(qubit_kernel_matrix(p.theta, p.phi), delta_b)
    else:
        kernel = delta_b
    val = np.trace(rho.entries @ kernel)
    if abs(val.imag) > 1e-9:
        raise CutoffInsufficient(
            f"Wigner oracle imaginary residue {val.imag:.2e}; raise the cutoff")
    return float(val.real)


def thermal_dm(nbar: float, spec: TruncationSpec) -> FockOperator:
    """Geometric thermal state diag(nbar^n / (nbar+1)^(n+1)), renormalized."""
    if nbar < 0:
        raise DomainError("nbar must be nonnegative")
    n = np.arange(spec.cutoff)
    if nbar == 0:
        weights = np.zeros(spec.cutoff)
        weights[0] = 1.0
    else:
        weights = np.exp(n * math.log(nbar / (nbar + 1.0))) / (nbar + 1.0)
    tail = 1.0 - weights.sum()
    if tail > spec.leakage_tol:
        raise CutoffInsufficient(
            f"thermal tail weight {tail:.2e} exceeds {spec.leakage_tol:.1e} at "
            f"cutoff {spec.cutoff}")
    weights = weights / weights.sum()
    return FockOperator(spec.cutoff, np.diag(weights).astype(complex))


def coherent_state_vector(alpha: complex, spec: TruncationSpec) -> np.ndarray:
    """Number-basis coefficients of |alpha>, exp(-|a|^2/2) a^n / sqrt(n!)."""
    alpha = complex(alpha)
    n = np.arange(spec.cutoff)
    log_fact = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1, spec.cutoff)))))
    if alpha == 0:
        vec = np.zeros(spec.cutoff, dtype=complex)
        vec[0] = 1.0
        return vec
    log_mod = -0.5 * abs(alpha) ** 2 + n * math.log(abs(alpha)) - 0.5 * log_fact
    vec = np.exp(log_mod) * np.exp(1j * n * np.angle(alpha))
    tail = 1.0 - np.vdot(vec, vec).real
    if tail > spec.leakage_tol:
        raise CutoffInsufficient(
            f"coherent |alpha|={abs(alpha):.3f} tail {tail:.2e} at cutoff "
            f"{spec.cutoff}")
    return vec


def dyadic_to_fock(state: HybridDyadState, spec: TruncationSpec) -> FockOperator:
    """Dense hybrid matrix of a dyadic state (qubit-major ordering)."""
    n = spec.cutoff
    rho = np.zeros((2 * n, 2 * n), dtype=complex)
    cache: dict[complex, np.ndarray] = {}

    def vec(amp: complex) -> np.ndarray:
        amp = complex(amp)
        if amp not in cache:
            cache[amp] = coherent_state_vector(amp, spec)
        return cache[amp]

    for c, q, b in state.terms:
        ket, bra = vec(b.ket_amp), vec(b.bra_amp)
        i, j = q.ket_index, q.bra_index
        rho[i * n:(i + 1) * n, j * n:(j + 1) * n] += c * np.outer(ket, bra.conj())
    return FockOperator(n, rho)


def initial_oscillator_dm(scenario: ScenarioParams, spec: TruncationSpec) -> FockOperator:
    """rho_b(0) for the scenario's family."""
    fam = scenario.family
    if isinstance(fam, Coherent):
        v = coherent_state_vector(fam.gamma, spec)
        return FockOperator(spec.cutoff, np.outer(v, v.conj()))
    if isinstance(fam, Thermal):
        return thermal_dm(fam.nbar, spec)
    if isinstance(fam, Cat):
        v = coherent_state_vector(fam.gamma, spec) + coherent_state_vector(
            -fam.gamma, spec)
        v = v / math.sqrt(cat_normalization(fam.gamma))
        return FockOperator(spec.cutoff, np.outer(v, v.conj()))
    raise DomainError(f"unknown scenario family {fam!r}")


def initial_hybrid_dm(scenario: ScenarioParams, spec: TruncationSpec) -> FockOperator:
    """(|0>+|1>)(<0|+<1|)/2 (x) rho_b(0)."""
    qubit = 0.5 * np.ones((2, 2), dtype=complex)
    osc = initial_oscillator_dm(scenario, spec).entries
    return FockOperator(spec.cutoff, np.kron(qubit, osc))


def auto_cutoff(scenario: ScenarioParams) -> int:
    """Occupation-based default cutoff; validate by doubling where it matters."""
    fam = scenario.family
    amp = 2.0 * abs(scenario.lam)
    tail = 0
    if isinstance(fam, (Coherent, Cat)):
        amp += abs(fam.gamma)
    elif isinstance(fam, Thermal):
        amp += math.sqrt(fam.nbar)
        if fam.nbar > 0:
            # geometric tail (nbar/(nbar+1))^n decays slowly; push it below 1e-12
            tail = math.ceil(-12.0 * math.log(10.0)
                             / math.log(fam.nbar / (fam.nbar + 1.0)))
    return max(32, tail, math.ceil(amp**2 + 10.0 * amp + 20.0))
