"""Splitting-statistics reports: a CSV of how each prime factors, plus figures.

The figures show the running fraction of split/inert/ramified primes (the two
non-ramified fractions each head to 1/2) and the prime-ideal counting staircase
next to the rational-prime one.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .field import QuadraticField
from .infinitude import rational_prime_stream
from .splitting import split_prime

_TYPE_BY_NFACTORS = {1: "inert", 2: "split"}


@dataclass(frozen=True)
class ReportPaths:
    csv: Path
    figures: tuple[Path, ...]


def _splitting_rows(field: QuadraticField, max_p: int) -> list[dict]:
    rows = []
    for p in rational_prime_stream():
        if p > max_p:
            break
        fz = split_prime(field, p)
        if fz.factors[0][0].e == 2:
            kind = "ramified"
        else:
            kind = _TYPE_BY_NFACTORS[len(fz.factors)]
        rows.append(
            {
                "p": p,
                "type": kind,
                "factors": str(fz),
                "prime_ideals": len(fz.factors),
                "residue_degrees": "/".join(str(f.f) for f, _ in fz.factors),
            }
        )
    return rows


def write_splitting_report(
    field: QuadraticField, max_p: int, out_dir: str | Path
) -> ReportPaths:
    """Write splitting_d<d>.csv and two PNG figures into out_dir."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    tag = f"d{field.d}".replace("-", "m")
    rows = _splitting_rows(field, max_p)

    csv_path = out / f"splitting_{tag}.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["p", "type", "factors", "prime_ideals", "residue_degrees"]
        )
        writer.writeheader()
        writer.writerows(rows)

    ps = [r["p"] for r in rows]
    running = {"split": [], "inert": [], "ramified": []}
    counts = {"split": 0, "inert": 0, "ramified": 0}
    ideal_count = []
    total_ideals = 0
    for i, r in enumerate(rows, start=1):
        counts[r["type"]] += 1
        for kind in running:
            running[kind].append(counts[kind] / i)
        total_ideals += r["prime_ideals"]
        ideal_count.append(total_ideals)

    fig1, ax = plt.subplots(figsize=(6.4, 4.0))
    for kind, style in (("split", "-"), ("inert", "--"), ("ramified", ":")):
        ax.plot(ps, running[kind], style, label=kind)
    ax.axhline(0.5, color="gray", lw=0.8, alpha=0.6)
    ax.set_xlabel("rational prime p")
    ax.set_ylabel("running fraction")
    ax.set_title(f"Splitting behaviour in Q(sqrt({field.d}))")
    ax.legend()
    frac_path = out / f"split_fraction_{tag}.png"
    fig1.tight_layout()
    fig1.savefig(frac_path, dpi=150)
    plt.close(fig1)

    fig2, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.step(ps, ideal_count, where="post", label="prime ideals over p <= x")
    ax.step(ps, list(range(1, len(ps) + 1)), where="post",
            label="rational primes <= x", alpha=0.7)
    ax.set_xlabel("x")
    ax.set_ylabel("count")
    ax.set_title(f"Prime ideal count in Q(sqrt({field.d}))")
    ax.legend()
    count_path = out / f"prime_count_{tag}.png"
    fig2.tight_layout()
    fig2.savefig(count_path, dpi=150)
    plt.close(fig2)

    return ReportPaths(csv=csv_path, figures=(frac_path, count_path))
