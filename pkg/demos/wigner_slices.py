#!/usr/bin/env python3
"""Slices of the generalized Wigner function, three ways.

The same value is computed from the closed-form expression, from the symbolic
coherent-dyad engine, and from a dense truncated number-basis calculation.
They agree to many digits; the first is what the quadrature engine uses.
"""

import math

import numpy as np

from hybridwigner import (
    Cat,
    PhasePoint,
    ScenarioParams,
    TruncationSpec,
    auto_cutoff,
    dyadic_to_fock,
    evolve_dyadic,
    initial_dyadic_state,
    wigner_closed_form,
    wigner_dyadic,
    wigner_oracle,
)

sc = ScenarioParams(0.1, Cat(1.0))
omega_t = math.pi

state = evolve_dyadic(initial_dyadic_state(sc), sc.lam, omega_t)
spec = TruncationSpec(auto_cutoff(sc) + 40)
rho = dyadic_to_fock(state, spec)

print("theta=pi/2, phi=0 slice along real beta, at omega t = pi")
print("  beta    closed form     dyadic engine   number basis")
for b in np.linspace(-2.0, 2.0, 9):
    p = PhasePoint(math.pi / 2, 0.0, complex(b, 0.0))
    w_closed = wigner_closed_form(sc, omega_t, p)
    w_dyadic = wigner_dyadic(state, p)
    w_fock = wigner_oracle(rho, p, spec)
    print(f"  {b:+5.2f}  {w_closed:+.12f}  {w_dyadic:+.12f}  {w_fock:+.12f}")

# the interference fringes go negative between the two cat lobes
p = PhasePoint(math.pi / 2, math.pi, 0.0 + 0.4j)
print(f"\nfringe point W = {wigner_closed_form(sc, omega_t, p):+.6f}"
      " (negative regions are the entanglement resource)")
