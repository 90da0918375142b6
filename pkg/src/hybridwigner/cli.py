"""Command-line sweeps over dimensionless time.

Each sweep evaluates, on a uniform omega_t/pi grid including both endpoints,
the negativity volume with its quadrature error, the separable-state critical
value, the conditional-state fidelity, and the resulting entanglement verdict,
and writes them as CSV or JSON.  Exit codes: 0 success, 2 configuration error,
3 quadrature non-convergence, 4 insufficient basis cutoff.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .errors import CutoffInsufficient, DomainError, QuadratureNonConvergence
from .fidelity import (
    ENTANGLEMENT_TOL,
    build_sigma_pair,
    fidelity_closed_form,
    uhlmann_fidelity,
)
from .fock import TruncationSpec, auto_cutoff, dyadic_to_fock, wigner_oracle
from .kernels import wigner_closed_form
from .negativity import (
    QuadratureSpec,
    critical_value,
    negativity_volume_hybrid,
)
from .states import (
    Cat,
    Coherent,
    PhasePoint,
    ScenarioParams,
    Thermal,
    initial_dyadic_state,
)
from .dynamics import evolve_dyadic

__all__ = [
    "SweepConfig",
    "SweepRow",
    "CSV_COLUMNS",
    "run_sweep",
    "parse_config",
    "serialize_config",
    "rows_to_csv",
    "rows_to_json",
    "main",
]

CSV_COLUMNS = (
    "omega_t_over_pi",
    "negativity_volume",
    "negativity_err",
    "critical_value",
    "fidelity",
    "witnessed_entangled",
)


class ConfigError(Exception):
    """Invalid or inconsistent sweep configuration (exit code 2)."""


@dataclass(frozen=True)
class SweepConfig:
    scenario: ScenarioParams
    t_max_over_pi: float = 4.0
    t_steps: int = 161
    quad: QuadratureSpec = QuadratureSpec()
    oracle_checks: bool = False
    output_path: str | None = None
    output_format: str = "csv"

    def __post_init__(self):
        if self.t_steps < 2:
            raise ConfigError("t-steps must be at least 2")
        if self.t_max_over_pi <= 0:
            raise ConfigError("t-max-over-pi must be positive")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.output_format!r}")


@dataclass(frozen=True)
class SweepRow:
    omega_t_over_pi: float
    negativity_volume: float
    negativity_err: float
    critical_value: float
    fidelity: float
    witnessed_entangled: bool


def _oracle_check_row(scenario: ScenarioParams, omega_t: float,
                      fidelity: float) -> None:
    """Cross-validate one time point against the number-basis oracle."""
    spec = TruncationSpec(auto_cutoff(scenario))
    if not isinstance(scenario.family, Thermal):
        state = evolve_dyadic(
            initial_dyadic_state(scenario), scenario.lam, omega_t)
        rho = dyadic_to_fock(state, spec)
        for p in (PhasePoint(0.7, 1.1, 0.2 + 0.1j),
                  PhasePoint(2.1, 4.0, -0.3 + 0.5j)):
            closed = wigner_closed_form(scenario, omega_t, p)
            oracle = wigner_oracle(rho, p, spec)
            if abs(closed - oracle) > 1e-6:
                raise CutoffInsufficient(
                    f"closed-form Wigner deviates from the oracle by "
                    f"{abs(closed - oracle):.2e} at omega_t={omega_t:.6f}")
    sigma0, sigma1 = build_sigma_pair(scenario, omega_t, spec)
    if abs(uhlmann_fidelity(sigma0, sigma1) - fidelity) > 1e-6:
        raise CutoffInsufficient(
            f"closed-form fidelity deviates from the oracle at "
            f"omega_t={omega_t:.6f}")


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    """Evaluate all rows of the sweep; rows computed in parallel, returned in
    grid order."""
    grid = np.linspace(0.0, config.t_max_over_pi, config.t_steps)

    def row(x: float) -> SweepRow:
        omega_t = math.pi * x
        result = negativity_volume_hybrid(config.scenario, omega_t, config.quad)
        crit = critical_value(config.scenario, omega_t, config.quad)
        fid = fidelity_closed_form(config.scenario, omega_t).value
        witnessed = result.volume > crit + result.error_estimate
        if config.oracle_checks:
            _oracle_check_row(config.scenario, omega_t, fid)
        return SweepRow(
            float(x), result.volume, result.error_estimate, crit, fid, witnessed)

    with ThreadPoolExecutor() as pool:
        return list(pool.map(row, grid))


# ---------------------------------------------------------------------------
# configuration


_SCENARIO_KEYS = {
    "coherent": {"gamma-re", "gamma-im"},
    "cat": {"gamma-re", "gamma-im"},
    "thermal": {"nbar"},
}


def _build_scenario(values: dict) -> ScenarioParams:
    name = values.get("scenario")
    if name is None:
        raise ConfigError("scenario is required (coherent|thermal|cat)")
    if name not in _SCENARIO_KEYS:
        raise ConfigError(f"unknown scenario {name!r}")
    for key in ("gamma-re", "gamma-im", "nbar"):
        if values.get(key) is not None and key not in _SCENARIO_KEYS[name]:
            raise ConfigError(f"{key} does not apply to scenario {name}")
    lam = float(values.get("lambda", 0.1))
    gamma = complex(float(values.get("gamma-re") or 0.0),
                    float(values.get("gamma-im") or 0.0))
    if name == "coherent":
        family = Coherent(gamma)
    elif name == "cat":
        family = Cat(gamma)
    else:
        family = Thermal(float(values.get("nbar") or 0.0))
    return ScenarioParams(lam, family)


def _read_config_file(path: str) -> dict:
    values: dict = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(
                        f"{path}:{lineno}: expected key = value, got {line!r}")
                key, _, val = line.partition("=")
                values[key.strip()] = val.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return values


def parse_config(argv: list[str]) -> SweepConfig:
    """Build a SweepConfig from CLI flags, with flags overriding --config file
    values.  Raises ConfigError on any invalid or inapplicable key."""
    parser = argparse.ArgumentParser(
        prog="hybridwigner",
        description="Negativity-volume and fidelity time sweeps for the "
                    "gravitationally coupled qubit-oscillator system.")
    parser.add_argument("--scenario", choices=("coherent", "thermal", "cat"))
    parser.add_argument("--lambda", dest="lam", type=float)
    parser.add_argument("--gamma-re", type=float)
    parser.add_argument("--gamma-im", type=float)
    parser.add_argument("--nbar", type=float)
    parser.add_argument("--t-max-over-pi", type=float)
    parser.add_argument("--t-steps", type=int)
    parser.add_argument("--theta-nodes", type=int)
    parser.add_argument("--phi-nodes", type=int)
    parser.add_argument("--beta-nodes", type=int)
    parser.add_argument("--beta-radius")
    parser.add_argument("--tol", type=float)
    parser.add_argument("--oracle-checks", action="store_true", default=None)
    parser.add_argument("--out")
    parser.add_argument("--format", choices=("csv", "json"))
    parser.add_argument("--config")
    ns = parser.parse_args(argv)

    values: dict = {}
    if ns.config:
        values.update(_read_config_file(ns.config))
    flag_values = {
        "scenario": ns.scenario,
        "lambda": ns.lam,
        "gamma-re": ns.gamma_re,
        "gamma-im": ns.gamma_im,
        "nbar": ns.nbar,
        "t-max-over-pi": ns.t_max_over_pi,
        "t-steps": ns.t_steps,
        "theta-nodes": ns.theta_nodes,
        "phi-nodes": ns.phi_nodes,
        "beta-nodes": ns.beta_nodes,
        "beta-radius": ns.beta_radius,
        "tol": ns.tol,
        "oracle-checks": ns.oracle_checks,
        "out": ns.out,
        "format": ns.format,
    }
    known = set(flag_values)
    for key in values:
        if key not in known:
            raise ConfigError(f"unknown config key {key!r}")
    for key, val in flag_values.items():
        if val is not None:
            values[key] = val

    try:
        scenario = _build_scenario(values)
        quad = QuadratureSpec()
        if values.get("theta-nodes") is not None:
            quad = replace(quad, theta_nodes=int(values["theta-nodes"]))
        if values.get("phi-nodes") is not None:
            quad = replace(quad, phi_nodes=int(values["phi-nodes"]))
        if values.get("beta-nodes") is not None:
            quad = replace(quad, beta_nodes_per_axis=int(values["beta-nodes"]))
        radius = values.get("beta-radius")
        if radius is not None and str(radius) != "auto":
            quad = replace(quad, beta_radius=float(radius))
        if values.get("tol") is not None:
            quad = replace(quad, rel_tolerance=float(values["tol"]))
        oracle = values.get("oracle-checks", False)
        if isinstance(oracle, str):
            if oracle.lower() not in ("true", "false"):
                raise ConfigError("oracle-checks must be true or false")
            oracle = oracle.lower() == "true"
        return SweepConfig(
            scenario=scenario,
            t_max_over_pi=float(values.get("t-max-over-pi", 4.0)),
            t_steps=int(values.get("t-steps", 161)),
            quad=quad,
            oracle_checks=bool(oracle),
            output_path=values.get("out"),
            output_format=values.get("format", "csv"),
        )
    except (ValueError, DomainError) as exc:
        raise ConfigError(str(exc)) from exc


def serialize_config(config: SweepConfig) -> str:
    """Emit the key = value form accepted by --config (round-trips through
    parse_config)."""
    fam = config.scenario.family
    lines = []
    if isinstance(fam, Coherent):
        lines.append("scenario = coherent")
        gamma = complex(fam.gamma)
    elif isinstance(fam, Cat):
        lines.append("scenario = cat")
        gamma = complex(fam.gamma)
    else:
        lines.append("scenario = thermal")
        lines.append(f"nbar = {fam.nbar!r}")
        gamma = None
    if gamma is not None:
        lines.append(f"gamma-re = {gamma.real!r}")
        lines.append(f"gamma-im = {gamma.imag!r}")
    lines.append(f"lambda = {config.scenario.lam!r}")
    lines.append(f"t-max-over-pi = {config.t_max_over_pi!r}")
    lines.append(f"t-steps = {config.t_steps}")
    quad = config.quad
    lines.append(f"theta-nodes = {quad.theta_nodes}")
    lines.append(f"phi-nodes = {quad.phi_nodes}")
    lines.append(f"beta-nodes = {quad.beta_nodes_per_axis}")
    lines.append("beta-radius = "
                 + ("auto" if quad.beta_radius is None else repr(quad.beta_radius)))
    lines.append(f"tol = {quad.rel_tolerance!r}")
    lines.append(f"oracle-checks = {'true' if config.oracle_checks else 'false'}")
    if config.output_path:
        lines.append(f"out = {config.output_path}")
    lines.append(f"format = {config.output_format}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# output


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def rows_to_csv(rows: list[SweepRow]) -> str:
    out = [",".join(CSV_COLUMNS)]
    for r in rows:
        out.append(",".join([
            _fmt(r.omega_t_over_pi),
            _fmt(r.negativity_volume),
            _fmt(r.negativity_err),
            _fmt(r.critical_value),
            _fmt(r.fidelity),
            "true" if r.witnessed_entangled else "false",
        ]))
    return "\n".join(out) + "\n"


def rows_to_json(rows: list[SweepRow]) -> str:
    payload = [
        {
            "omega_t_over_pi": r.omega_t_over_pi,
            "negativity_volume": r.negativity_volume,
            "negativity_err": r.negativity_err,
            "critical_value": r.critical_value,
            "fidelity": r.fidelity,
            "witnessed_entangled": r.witnessed_entangled,
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_config(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        rows = run_sweep(config)
    except QuadratureNonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CutoffInsufficient as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    text = rows_to_csv(rows) if config.output_format == "csv" else rows_to_json(rows)
    if config.output_path:
        with open(config.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
