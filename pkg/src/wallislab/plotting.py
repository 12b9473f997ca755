"""Figure rendering for convergence tables.

Tables stay the canonical machine-readable artifact; figures are rendered
next to them for quick visual inspection of the convergence rate.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .numkit import MethodId
from .report import ConvergenceRecord


def render_convergence_figure(
    records: Sequence[ConvergenceRecord],
    method: MethodId,
    path: str,
) -> None:
    """Write a two-panel convergence figure (PNG/PDF/SVG by extension).

    Left panel: absolute error versus index on a log scale.  Right panel:
    correct digits in base 10 and base 4.
    """
    if not records:
        raise ValueError("no records to plot")
    indices = [r.index for r in records]
    errors = [float(r.abs_error) for r in records]
    d10 = [r.digits_b10 for r in records]
    d4 = [r.digits_b4 for r in records]

    fig, (ax_err, ax_dig) = plt.subplots(1, 2, figsize=(9.5, 3.8))
    ax_err.semilogy(indices, errors, marker=".", lw=1, color="tab:blue")
    ax_err.set_xlabel("index")
    ax_err.set_ylabel("absolute error")
    ax_err.set_title(f"{method.value}: error vs reference")
    ax_err.grid(True, which="both", alpha=0.3)

    ax_dig.plot(indices, d10, marker=".", lw=1, label="base 10")
    ax_dig.plot(indices, d4, marker=".", lw=1, label="base 4")
    ax_dig.set_xlabel("index")
    ax_dig.set_ylabel("correct digits")
    ax_dig.set_title("digits gained")
    ax_dig.legend()
    ax_dig.grid(True, alpha=0.3)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
