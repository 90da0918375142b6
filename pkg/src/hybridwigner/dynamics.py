"""Time evolution under the conditional-displacement coupling.

The interaction displaces the oscillator in a direction conditioned on the
qubit basis state.  Working in units of the oscillator frequency, the whole
evolution is parameterized by the dimensionless coupling ``lam`` and the
dimensionless time ``omega_t``; the displacement amplitude is

    alpha_t = lam * (exp(-i * omega_t) - 1),

and the accumulated dynamical phase is ``c_t = lam**2 * (omega_t - sin(omega_t))``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .states import CoherentDyad, HybridDyadState, QubitDyad

__all__ = [
    "alpha_t",
    "c_t",
    "PhysicalSetup",
    "EvolutionParams",
    "coupling_from_physical",
    "nbar_from_temperature",
    "evolve_dyadic",
]

HBAR_SI = 1.054571817e-34  # J s
KB_SI = 1.380649e-23  # J / K


def alpha_t(lam: float, omega_t: float) -> complex:
    """Conditional displacement amplitude at dimensionless time omega_t."""
    return lam * (cmath.exp(-1j * omega_t) - 1.0)


def c_t(lam: float, omega_t: float) -> float:
    """Accumulated dynamical phase, nonnegative and nondecreasing in time."""
    return lam**2 * (omega_t - math.sin(omega_t))


@dataclass(frozen=True)
class PhysicalSetup:
    """Laboratory parameters of the particle-oscillator geometry (SI units).

    Set ``hbar=1`` (and feed unit-free numbers) to work in natural units.
    """

    grav_const: float
    mass_oscillator: float
    mass_particle: float
    separation: float  # distance between the two particle branches
    distance: float  # particle-to-oscillator distance
    omega: float
    hbar: float = HBAR_SI

    def __post_init__(self):
        positive = {
            "grav_const": self.grav_const,
            "mass_oscillator": self.mass_oscillator,
            "mass_particle": self.mass_particle,
            "omega": self.omega,
            "hbar": self.hbar,
        }
        for name, value in positive.items():
            if value <= 0:
                raise DomainError(f"{name} must be strictly positive")
        if self.separation < 0:
            raise DomainError("separation must be nonnegative")
        if self.distance < 0:
            raise DomainError("distance must be nonnegative")


@dataclass(frozen=True)
class EvolutionParams:
    """Dimensionless coupling and time."""

    lam: float
    omega_t: float

    def __post_init__(self):
        if self.omega_t < 0:
            raise DomainError("omega_t must be nonnegative")


def coupling_from_physical(setup: PhysicalSetup) -> tuple[float, float]:
    """Coupling frequency g and dimensionless lam = g / omega from the geometry.

    g = G M m l / r**3 / sqrt(2 M omega hbar) with r = sqrt(L**2 + l**2 / 4);
    the hbar makes g a frequency in SI units and is 1 in natural units.
    """
    r = math.hypot(setup.distance, setup.separation / 2.0)
    if r == 0.0:
        raise DomainError("distance and separation cannot both vanish")
    g = (
        setup.grav_const
        * setup.mass_oscillator
        * setup.mass_particle
        * setup.separation
        / r**3
        / math.sqrt(2.0 * setup.mass_oscillator * setup.omega * setup.hbar)
    )
    return g, g / setup.omega


def nbar_from_temperature(
    temperature: float,
    omega: float,
    hbar: float = HBAR_SI,
    k_b: float = KB_SI,
) -> float:
    """Thermal occupation nbar = k_B T / (2 hbar omega).

    This is the linear-in-T convention used throughout the library, not the
    Bose-Einstein occupation.
    """
    if temperature < 0:
        raise DomainError("temperature must be nonnegative")
    return k_b * temperature / (2.0 * hbar * omega)


def _branch_sign(index: int) -> float:
    # |0> couples with +g, |1> with -g
    return 1.0 if index == 0 else -1.0


def evolve_dyadic(initial: HybridDyadState, lam: float, omega_t: float) -> HybridDyadState:
    """Unitary evolution of a dyadic state, term by term and exact.

    Each coherent label a on the qubit branch with sign s picks up the
    displacement -s * conj(alpha_t) and the free rotation exp(-i * omega_t);
    the displacement phase and the global dynamical phase are folded into the
    term coefficient, never into the labels.
    """
    initial.check_hermitian()
    a_t = alpha_t(lam, omega_t)
    rot = cmath.exp(-1j * omega_t)
    global_phase = cmath.exp(1j * c_t(lam, omega_t) ** 2)

    def branch(label: complex, sign: float) -> tuple[complex, complex]:
        """New label and accumulated ket-side phase for one qubit branch."""
        label = complex(label)
        phase = global_phase * cmath.exp(
            sign * (a_t * label - a_t.conjugate() * label.conjugate()) / 2.0
        )
        return rot * (label - sign * a_t.conjugate()), phase

    terms = []
    for c, q, b in initial.terms:
        ket_label, ket_phase = branch(b.ket_amp, _branch_sign(q.ket_index))
        bra_label, bra_phase = branch(b.bra_amp, _branch_sign(q.bra_index))
        terms.append(
            (
                c * ket_phase * bra_phase.conjugate(),
                QubitDyad(q.ket_index, q.bra_index),
                CoherentDyad(ket_label, bra_label),
            )
        )
    return HybridDyadState(terms)
