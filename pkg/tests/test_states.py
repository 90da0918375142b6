import math

import numpy as np
import pytest

from hybridwigner.errors import DomainError, HermiticityViolation
from hybridwigner.states import (
    Cat,
    Coherent,
    CoherentDyad,
    HybridDyadState,
    PhasePoint,
    QubitDyad,
    ScenarioParams,
    Thermal,
    cat_normalization,
    coherent_overlap,
    initial_dyadic_state,
)


def test_phase_point_domain():
    PhasePoint(0.0, 0.0, 0.0)
    PhasePoint(math.pi, 2 * math.pi - 1e-12, 1.0 + 2.0j)
    with pytest.raises(DomainError):
        PhasePoint(-0.1, 0.0, 0.0)
    with pytest.raises(DomainError):
        PhasePoint(0.5, -0.1, 0.0)
    with pytest.raises(DomainError):
        PhasePoint(0.5, 0.5, complex("inf"))


def test_coherent_overlap():
    assert coherent_overlap(0.0, 0.0) == 1.0
    a, b = 0.7 + 0.2j, -0.3 + 1.1j
    # |<b|a>|^2 = exp(-|a-b|^2)
    assert abs(coherent_overlap(a, b)) ** 2 == pytest.approx(
        math.exp(-abs(a - b) ** 2))


def test_cat_normalization():
    assert cat_normalization(0.0) == pytest.approx(4.0)
    g = 1.3
    assert cat_normalization(g) == pytest.approx(2 + 2 * math.exp(-2 * g * g))


def test_hermiticity_check():
    sym = HybridDyadState([
        (0.5 + 0.0j, QubitDyad(0, 1), CoherentDyad(0.2, 0.1)),
        (0.5 - 0.0j, QubitDyad(1, 0), CoherentDyad(0.1, 0.2)),
    ])
    sym.check_hermitian()
    lopsided = HybridDyadState([
        (0.5 + 0.0j, QubitDyad(0, 1), CoherentDyad(0.2, 0.1)),
    ])
    with pytest.raises(HermiticityViolation):
        lopsided.check_hermitian()


def test_trace_of_initial_states():
    for fam in (Coherent(0.0), Coherent(1.0 + 0.5j), Cat(1.0), Cat(0.3 - 0.2j)):
        state = initial_dyadic_state(ScenarioParams(0.1, fam))
        state.check_hermitian()
        assert state.trace() == pytest.approx(1.0, abs=1e-12)


def test_initial_term_counts():
    coh = initial_dyadic_state(ScenarioParams(0.1, Coherent(1.0)))
    assert len(coh.terms) == 4
    cat = initial_dyadic_state(ScenarioParams(0.1, Cat(1.0)))
    assert len(cat.terms) == 16


def test_thermal_has_no_dyadic_form():
    with pytest.raises(DomainError):
        initial_dyadic_state(ScenarioParams(0.1, Thermal(3.0)))


def test_family_domain_errors():
    with pytest.raises(DomainError):
        Thermal(-0.5)
    with pytest.raises(DomainError):
        ScenarioParams(float("nan"), Coherent(0.0))
