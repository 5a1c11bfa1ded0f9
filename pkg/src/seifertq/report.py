"""Delimited summaries and figures for the headline computations.

Two reports are rendered side by side as CSV plus a matplotlib figure:
the wheel-surgery scan (which windings (n, m) give knots whose value
leaves the minimal-Seifert-rank subgroup) and the growth of the value
group relative to that subgroup as the orbit window widens.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .claspers import StandardSurface, WheelClasper, q_surgery
from .ltheta import (
    canonical_orbit_triples,
    membership,
    minimal_rank_generators,
    window_rank_gap,
)


def wheel_scan_rows(width=3):
    """(n, m, value text, member flag, witness text) over the grid."""
    surface = StandardSurface(1)
    gens = list(minimal_rank_generators())
    rows = []
    for n in range(-width, width + 1):
        for m in range(-width, width + 1):
            value = q_surgery([WheelClasper(bands=(0, 1), windings=(n, m))], surface)
            witness = membership(value, gens)
            rows.append(
                (
                    n,
                    m,
                    value.to_text(),
                    witness is not None,
                    "" if witness is None else " ".join(str(c) for c in witness),
                )
            )
    return rows


def rank_growth_rows(max_window=5):
    """(window, orbit count, free rank gap) for windows 2..max_window."""
    rows = []
    for width in range(2, max_window + 1):
        orbits = len(canonical_orbit_triples(width))
        rows.append((width, orbits, window_rank_gap(width)))
    return rows


def render_report(out_dir, width=3, max_window=5):
    """Write both CSV tables and both figures; returns the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    scan = wheel_scan_rows(width)
    scan_csv = os.path.join(out_dir, "wheel_scan.csv")
    with open(scan_csv, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "m", "q_value", "member", "witness"])
        for n, m, text, member, witness in scan:
            writer.writerow([n, m, text, "yes" if member else "no", witness])
    paths.append(scan_csv)

    side = 2 * width + 1
    grid = [[0] * side for _ in range(side)]
    for n, m, _, member, _ in scan:
        grid[m + width][n + width] = 1 if member else 0
    fig, ax = plt.subplots(figsize=(5, 4.2))
    ax.imshow(
        grid,
        origin="lower",
        extent=(-width - 0.5, width + 0.5, -width - 0.5, width + 0.5),
        cmap="RdYlGn",
        vmin=0,
        vmax=1,
    )
    ax.set_xlabel("first winding n")
    ax.set_ylabel("second winding m")
    ax.set_title("wheel surgery: value inside (green) / outside (red) the\n"
                 "minimal-Seifert-rank subgroup")
    ax.set_xticks(range(-width, width + 1))
    ax.set_yticks(range(-width, width + 1))
    scan_png = os.path.join(out_dir, "wheel_membership.png")
    fig.tight_layout()
    fig.savefig(scan_png, dpi=150)
    plt.close(fig)
    paths.append(scan_png)

    growth = rank_growth_rows(max_window)
    growth_csv = os.path.join(out_dir, "rank_growth.csv")
    with open(growth_csv, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["window", "orbit_count", "free_rank_gap"])
        writer.writerows(growth)
    paths.append(growth_csv)

    fig, ax = plt.subplots(figsize=(5, 3.6))
    windows = [row[0] for row in growth]
    gaps = [row[2] for row in growth]
    ax.plot(windows, gaps, marker="o")
    ax.set_xlabel("orbit window (max exponent)")
    ax.set_ylabel("free rank of kernel / subgroup")
    ax.set_title("growth of the value group beyond the\nminimal-Seifert-rank subgroup")
    ax.set_xticks(windows)
    ax.grid(True, alpha=0.3)
    growth_png = os.path.join(out_dir, "rank_growth.png")
    fig.tight_layout()
    fig.savefig(growth_png, dpi=150)
    plt.close(fig)
    paths.append(growth_png)

    return paths
