"""Render sweep and speedup figures to files (SVG/PNG by extension)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import BenchRecord, SpeedupReport, format_dims

__all__ = ["plot_sweep", "plot_speedup"]


def plot_sweep(records: list[BenchRecord], path) -> None:
    """TVD and phase times against the truncation threshold."""
    taus = [r.threshold for r in records]
    fig, (ax_tvd, ax_time) = plt.subplots(1, 2, figsize=(9, 3.5))

    ax_tvd.plot(taus, [r.tvd for r in records], "o-", color="indigo")
    ax_tvd.set_xlabel("truncation threshold")
    ax_tvd.set_ylabel("TVD vs uncut")

    for key, color in [
        ("decompose_s", "royalblue"),
        ("simulate_s", "darkorange"),
        ("stitch_s", "limegreen"),
    ]:
        ax_time.plot(
            taus,
            [getattr(r, key) for r in records],
            "o-",
            color=color,
            label=key.removesuffix("_s"),
        )
    ax_time.set_xlabel("truncation threshold")
    ax_time.set_ylabel("time [s]")
    ax_time.legend()

    r0 = records[0]
    fig.suptitle(
        f"dims {format_dims(r0.dims)}, boundary {r0.boundary}, {r0.method}"
    )
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_speedup(reports: list[SpeedupReport], path) -> None:
    """Per-repetition times for one config, or speedup vs gate dimension for many."""
    fig, ax = plt.subplots(figsize=(6, 4))
    if len(reports) == 1:
        rep = reports[0]
        idx = range(len(rep.uncut_s))
        ax.plot(idx, rep.uncut_s, "o-", color="indigo", label="uncut")
        ax.plot(idx, rep.cut_s, "o-", color="darkorange", label="cut")
        ax.set_xlabel("repetition")
        ax.set_ylabel("time [s]")
        ax.set_title(
            f"dims {format_dims(rep.dims)}: speedup {rep.speedup:.2f}x"
        )
        ax.legend()
    else:
        gate_dims = [
            (r.dims[r.boundary - 1] * r.dims[r.boundary]) ** 2 for r in reports
        ]
        ax.plot(gate_dims, [r.speedup for r in reports], "o-", color="indigo")
        ax.set_xlabel("two-qudit gate dimension $(d_1 d_2)^2$")
        ax.set_ylabel("speedup")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
