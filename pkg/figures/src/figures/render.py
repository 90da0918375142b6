"""Render the sweep figures from hybridwigner CSV output.

Consumes only the CSV contract of the `hybridwigner` command line tool:
columns `omega_t_over_pi,negativity_volume,negativity_err,critical_value,
fidelity,witnessed_entangled`.  Four figures are supported:

- fig2 / fig3: negativity volume (solid blue) with the constant separable
  bound as a dashed red overlay,
- fig4: same, but the bound is a per-row curve,
- fig5: fidelity panels, one per input CSV.

Rendering is deterministic: fixed x range, y axis from 0 with 5% headroom.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["FigureSpec", "SchemaError", "load_rows", "render", "main"]

COLUMNS = (
    "omega_t_over_pi",
    "negativity_volume",
    "negativity_err",
    "critical_value",
    "fidelity",
    "witnessed_entangled",
)

WHICH = ("fig2", "fig3", "fig4", "fig5")


class SchemaError(Exception):
    """The input CSV does not carry the sweep schema."""


@dataclass(frozen=True)
class FigureSpec:
    which: str
    inputs: tuple[str, ...]
    output: str

    def __post_init__(self):
        if self.which not in WHICH:
            raise SchemaError(f"unknown figure {self.which!r}")
        want = 3 if self.which == "fig5" else 1
        if len(self.inputs) != want:
            raise SchemaError(
                f"{self.which} needs {want} input CSV(s), got {len(self.inputs)}")


def load_rows(path: str) -> list[dict]:
    """Parse and validate one sweep CSV; raises SchemaError on any mismatch."""
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise SchemaError(f"{path}: empty file") from None
            if tuple(header) != COLUMNS:
                raise SchemaError(
                    f"{path}: header {header!r} does not match the sweep schema")
            rows = []
            for lineno, rec in enumerate(reader, start=2):
                if len(rec) != len(COLUMNS):
                    raise SchemaError(f"{path}:{lineno}: wrong field count")
                try:
                    row = {k: float(v) for k, v in zip(COLUMNS[:-1], rec)}
                except ValueError as exc:
                    raise SchemaError(f"{path}:{lineno}: {exc}") from None
                flag = rec[-1].strip().lower()
                if flag not in ("true", "false"):
                    raise SchemaError(
                        f"{path}:{lineno}: witnessed_entangled must be "
                        f"true/false, got {rec[-1]!r}")
                row["witnessed_entangled"] = flag == "true"
                rows.append(row)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def _volume_figure(rows: list[dict], output: str) -> None:
    x = [r["omega_t_over_pi"] for r in rows]
    vol = [r["negativity_volume"] for r in rows]
    crit = [r["critical_value"] for r in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(x, vol, "b-", label="negativity volume")
    ax.plot(x, crit, "r--", label="separable bound")
    ax.set_xlim(0.0, x[-1])
    ax.set_ylim(0.0, 1.05 * max(max(vol), max(crit)))
    ax.set_xlabel(r"$\omega t/\pi$")
    ax.set_ylabel("negativity volume")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(output, dpi=150)
    plt.close(fig)


def _fidelity_figure(row_sets: list[list[dict]], labels: list[str],
                     output: str) -> None:
    fig, axes = plt.subplots(1, len(row_sets), figsize=(4.0 * len(row_sets), 3.2),
                             sharey=True)
    for ax, rows, label in zip(axes, row_sets, labels):
        x = [r["omega_t_over_pi"] for r in rows]
        f = [r["fidelity"] for r in rows]
        ax.plot(x, f, "b-")
        ax.set_xlim(0.0, x[-1])
        ax.set_ylim(0.0, 1.05)
        ax.set_xlabel(r"$\omega t/\pi$")
        ax.set_title(label)
    axes[0].set_ylabel("fidelity")
    fig.tight_layout()
    fig.savefig(output, dpi=150)
    plt.close(fig)


def render(spec: FigureSpec) -> None:
    """Render one figure to spec.output; raises SchemaError on bad input."""
    row_sets = [load_rows(p) for p in spec.inputs]
    if spec.which == "fig5":
        labels = [p.rsplit("/", 1)[-1].removesuffix(".csv") for p in spec.inputs]
        _fidelity_figure(row_sets, labels, spec.output)
    else:
        _volume_figure(row_sets[0], spec.output)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="figures",
        description="Render sweep figures from hybridwigner CSV output.")
    parser.add_argument("--which", required=True, choices=WHICH)
    parser.add_argument("--in", dest="inputs", required=True, nargs="+",
                        metavar="CSV")
    parser.add_argument("--out", required=True)
    ns = parser.parse_args(argv)
    try:
        render(FigureSpec(ns.which, tuple(ns.inputs), ns.out))
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
