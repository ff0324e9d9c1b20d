"""Parameter sweeps over the mixing families and eigen-branch diagnostics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bloch import bloch_decompose
from .discord import correlation_gram, discord_closed_form
from .states import FamilySpec, family_state
from .tensor_ops import sym3_top_eigen
from .total import total_quantum_correlations

__all__ = ["SweepRow", "sweep_family", "write_sweep_csv", "find_branch_crossings"]


@dataclass(frozen=True)
class SweepRow:
    p: float
    discords: tuple  # D_k for the reported parties, in order
    q: float


def sweep_family(family: str, p_from: float, p_to: float, steps: int, parts=None):
    """Rows of (p, D_k..., Q) on a uniform inclusive grid of the parameter."""
    if steps < 2:
        raise ValueError("a sweep needs at least 2 steps")
    probe = family_state(FamilySpec(family, min(max(p_from, 0.0), 1.0)))
    n = probe.n_parties
    if parts is None:
        parts = tuple(range(1, n + 1))
    parts = tuple(int(k) for k in parts)
    if any(not 1 <= k <= n for k in parts):
        raise ValueError(f"parts {parts} outside parties 1..{n}")
    rows = []
    for p in np.linspace(p_from, p_to, steps):
        dec = bloch_decompose(family_state(FamilySpec(family, float(p))))
        discords = tuple(discord_closed_form(dec, k).value for k in parts)
        q = total_quantum_correlations(dec).q_value
        rows.append(SweepRow(float(p), discords, q))
    return rows


def write_sweep_csv(rows, path, parts=None) -> None:
    """CSV with columns p, d<k>..., q at 12 significant digits."""
    if parts is None:
        parts = tuple(range(1, len(rows[0].discords) + 1))
    header = ["p"] + [f"d{k}" for k in parts] + ["q"]
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(",".join(header) + "\n")
        for row in rows:
            cells = [f"{row.p:.12g}"]
            cells += [f"{d:.12g}" for d in row.discords]
            cells.append(f"{row.q:.12g}")
            handle.write(",".join(cells) + "\n")


def _top_axis(family, part, p):
    dec = bloch_decompose(family_state(FamilySpec(family, float(p))))
    _, axis = sym3_top_eigen(correlation_gram(dec, part))
    return axis


def find_branch_crossings(
    family: str,
    part: int = 1,
    lo: float = 0.0,
    hi: float = 1.0,
    scan_steps: int = 201,
    tol: float = 1e-9,
):
    """Parameters where the top eigenvalue of the party's Gram matrix
    switches eigenvector branch.

    Detected as a discontinuity of the (deterministically tie-broken) top
    eigenvector along the parameter grid, then localized by bisection.
    Plateau degeneracies resolve to a constant vector, so only genuine
    branch switches register.
    """
    ps = np.linspace(lo, hi, scan_steps)
    axes = [_top_axis(family, part, p) for p in ps]
    crossings = []
    for i in range(len(ps) - 1):
        if abs(float(np.dot(axes[i], axes[i + 1]))) > 0.5:
            continue
        a, b = float(ps[i]), float(ps[i + 1])
        left = axes[i]
        while b - a > tol:
            mid = (a + b) / 2.0
            if abs(float(np.dot(_top_axis(family, part, mid), left))) > 0.5:
                a = mid
            else:
                b = mid
        crossings.append((a + b) / 2.0)
    return crossings
