"""Domain types: phase-space points, dyadic hybrid states, and scenario parameters.

A hybrid state is stored symbolically as a weighted sum of
``|i><j| (x) |a><b|`` terms with qubit indices i, j and coherent labels a, b.
This family is closed under the conditional-displacement evolution, so the
coherent-state states of the library never need a number-basis truncation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Union

from .errors import DomainError, HermiticityViolation

__all__ = [
    "PhasePoint",
    "QubitDyad",
    "CoherentDyad",
    "HybridDyadState",
    "Coherent",
    "Thermal",
    "Cat",
    "ScenarioParams",
    "coherent_overlap",
    "cat_normalization",
    "initial_dyadic_state",
]


def coherent_overlap(bra_amp: complex, ket_amp: complex) -> complex:
    """Overlap <bra|ket> of two coherent states with the given labels."""
    a, b = complex(ket_amp), complex(bra_amp)
    return cmath.exp(-0.5 * abs(a) ** 2 - 0.5 * abs(b) ** 2 + b.conjugate() * a)


@dataclass(frozen=True)
class PhasePoint:
    """A point (theta, phi, beta) on the Bloch-angle x complex-plane phase space.

    theta in [0, pi], phi in [0, 2*pi); beta is the complex displacement
    amplitude.  The qubit kernel is independent of the third Euler angle,
    which is therefore not part of the point.
    """

    theta: float
    phi: float
    beta: complex

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta={self.theta} outside [0, pi]")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise DomainError(f"phi={self.phi} outside [0, 2*pi)")
        if not (math.isfinite(self.beta.real) and math.isfinite(self.beta.imag)):
            raise DomainError("beta must be finite")


@dataclass(frozen=True)
class QubitDyad:
    """Basis dyad |ket_index><bra_index| of the two-level system."""

    ket_index: int
    bra_index: int

    def __post_init__(self):
        if self.ket_index not in (0, 1) or self.bra_index not in (0, 1):
            raise DomainError("qubit dyad indices must be 0 or 1")


@dataclass(frozen=True)
class CoherentDyad:
    """Coherent-state dyad |ket_amp><bra_amp| of the oscillator."""

    ket_amp: complex
    bra_amp: complex

    def __post_init__(self):
        for z in (self.ket_amp, self.bra_amp):
            z = complex(z)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise DomainError("coherent labels must be finite")


DyadTerm = tuple[complex, QubitDyad, CoherentDyad]

# grouping resolution for matching conjugate partner terms
_KEY_DECIMALS = 9


@dataclass(frozen=True)
class HybridDyadState:
    """Weighted sum of qubit-dyad (x) coherent-dyad terms.

    Physical states must be Hermitian (every term has its conjugate-transpose
    partner) and have unit trace; both are checked by :meth:`validate`.
    """

    terms: tuple[DyadTerm, ...]

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple(
            (complex(c), q, b) for c, q, b in terms))

    def _grouped(self) -> dict:
        """Coefficients summed over identical (i, j, a, b) dyads."""
        acc: dict = {}
        for c, q, b in self.terms:
            key = (
                q.ket_index,
                q.bra_index,
                round(complex(b.ket_amp).real, _KEY_DECIMALS),
                round(complex(b.ket_amp).imag, _KEY_DECIMALS),
                round(complex(b.bra_amp).real, _KEY_DECIMALS),
                round(complex(b.bra_amp).imag, _KEY_DECIMALS),
            )
            acc[key] = acc.get(key, 0.0) + c
        return acc

    def check_hermitian(self, tol: float = 1e-10) -> None:
        """Raise :class:`HermiticityViolation` if a conjugate partner is missing."""
        grouped = self._grouped()
        for (i, j, ar, ai, br, bi), c in grouped.items():
            partner = grouped.get((j, i, br, bi, ar, ai), 0.0)
            if abs(partner - complex(c).conjugate()) > tol:
                raise HermiticityViolation(
                    f"term |{i}><{j}| (x) |{ar}+{ai}j><{br}+{bi}j| lacks its "
                    f"conjugate partner (mismatch {abs(partner - complex(c).conjugate()):.2e})"
                )

    def trace(self) -> complex:
        """Tr rho = sum over qubit-diagonal terms of c * <bra|ket>."""
        tr = 0.0 + 0.0j
        for c, q, b in self.terms:
            if q.ket_index == q.bra_index:
                tr += c * coherent_overlap(b.bra_amp, b.ket_amp)
        return tr

    def validate(self, tol: float = 1e-10) -> None:
        self.check_hermitian(tol)
        tr = self.trace()
        if abs(tr - 1.0) > tol:
            raise DomainError(f"trace {tr} differs from 1 beyond {tol}")


@dataclass(frozen=True)
class Coherent:
    """Oscillator initially in the coherent state |gamma>."""

    gamma: complex = 0.0


@dataclass(frozen=True)
class Thermal:
    """Oscillator initially thermal with mean occupation nbar."""

    nbar: float = 0.0

    def __post_init__(self):
        if self.nbar < 0:
            raise DomainError("nbar must be nonnegative")


@dataclass(frozen=True)
class Cat:
    """Oscillator initially in the even cat state |gamma> + |-gamma>."""

    gamma: complex = 1.0


Family = Union[Coherent, Thermal, Cat]


@dataclass(frozen=True)
class ScenarioParams:
    """Dimensionless coupling and the initial-state family of the oscillator.

    The qubit always starts in (|0> + |1>)/sqrt(2).
    """

    lam: float
    family: Family = field(default_factory=Coherent)

    def __post_init__(self):
        if not math.isfinite(self.lam):
            raise DomainError("lam must be finite")


def cat_normalization(gamma: complex) -> float:
    """Squared norm of |gamma> + |-gamma>."""
    return 2.0 + 2.0 * math.exp(-2.0 * abs(gamma) ** 2)


def initial_dyadic_state(scenario: ScenarioParams) -> HybridDyadState:
    """Exact dyadic form of the t = 0 state for the Coherent and Cat families.

    The thermal family is a continuum mixture of coherent states and has no
    finite dyadic form; request it from the number-basis oracle instead.
    """
    fam = scenario.family
    if isinstance(fam, Coherent):
        g = complex(fam.gamma)
        terms = [
            (0.5, QubitDyad(i, j), CoherentDyad(g, g))
            for i in (0, 1)
            for j in (0, 1)
        ]
        return HybridDyadState(terms)
    if isinstance(fam, Cat):
        g = complex(fam.gamma)
        norm = cat_normalization(g)
        terms = [
            (1.0 / (2.0 * norm), QubitDyad(i, j), CoherentDyad(sk * g, sb * g))
            for i in (0, 1)
            for j in (0, 1)
            for sk in (1.0, -1.0)
            for sb in (1.0, -1.0)
        ]
        return HybridDyadState(terms)
    raise DomainError(
        "the thermal family has no dyadic representation; use the Fock oracle")
