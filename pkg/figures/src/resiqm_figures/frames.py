"""Figure layouts: one row per snapshot step with wave-function columns
(|psi| solid, |Re psi| dashed, potential on a twin axis) and a shared
phase-space panel, mirroring the standard three-column presentation.
"""

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .rundir import RunDir

DEFAULT_SHOW = ("psi", "phi", "phase_space", "potential")
_WAVE_KINDS = {"psi": "snapshots_psi", "phi": "snapshots"}


@dataclass(frozen=True)
class FrameSpec:
    run_dir: str
    steps: tuple = ()
    show: tuple = DEFAULT_SHOW
    raw_parts: bool = False  # plot Re/Im instead of moduli

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))
        unknown = set(self.show) - set(DEFAULT_SHOW)
        if unknown:
            raise ValueError(f"unknown panels {sorted(unknown)}")


def _plot_wave(ax, x, values, overlay, label, raw_parts):
    if raw_parts:
        ax.plot(x, values.real, "-", color="tab:red", lw=1.0, label=f"Re {label}")
        ax.plot(x, values.imag, "--", color="tab:orange", lw=0.8, label=f"Im {label}")
    else:
        ax.plot(x, np.abs(values), "-", color="tab:red", lw=1.2, label=f"|{label}|")
        ax.plot(x, np.abs(values.real), "--", color="tab:red", lw=0.7,
                label=f"|Re {label}|")
    ax.set_xlim(x[0], x[-1])
    ax.tick_params(labelsize=7)
    if overlay is not None:
        twin = ax.twinx()
        twin.plot(x, overlay, "-", color="black", lw=0.8)
        lo, hi = float(np.min(overlay)), float(np.max(overlay))
        if hi > lo:
            twin.set_ylim(lo, hi + 0.15 * (hi - lo))
        twin.tick_params(labelsize=7)


def _plot_phase_space(ax, run, steps):
    ax.plot(run.q_exp, run.p_exp, "-", color="tab:red", lw=1.0)
    for step in steps:
        if step < len(run.q_exp):
            ax.plot(run.q_exp[step], run.p_exp[step], "o", ms=4, color="tab:blue")
    ax.set_xlabel("<q>", fontsize=8)
    ax.set_ylabel("<p>", fontsize=8)
    ax.tick_params(labelsize=7)
    ax.set_title("phase space", fontsize=8)


def _wave_row(run, step, columns, axes, raw_parts, want_potential):
    for kind, ax in zip(columns, axes):
        x, values = run.snapshot(step, _WAVE_KINDS[kind])
        overlay = None
        if want_potential:
            overlay = (
                run.potential_on(x)
                if kind == "psi"
                else run.effective_potential_on(x, step)
            )
        _plot_wave(ax, x, values, overlay, "psi" if kind == "psi" else "phi", raw_parts)
        ax.set_title(f"{kind}, step {step}", fontsize=8)


def render(frames: FrameSpec, out) -> list[Path]:
    """Write one PNG per requested step plus a combined grid image.

    Rendering is read-only over the run directory. Requested steps must
    exist as snapshots; a missing one raises an error naming the
    available steps.
    """
    run = RunDir(frames.run_dir)
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)

    columns = [k for k in ("psi", "phi") if k in frames.show]
    columns = [k for k in columns if run.available_steps(_WAVE_KINDS[k])]
    want_phase = "phase_space" in frames.show
    want_potential = "potential" in frames.show

    # validate all requested steps up front
    for step in frames.steps:
        for kind in columns:
            run.snapshot(step, _WAVE_KINDS[kind])

    written = []
    for step in frames.steps:
        n_cols = len(columns) + (1 if want_phase else 0)
        fig, axes = plt.subplots(
            1, max(n_cols, 1), figsize=(3.2 * max(n_cols, 1), 2.6), dpi=120
        )
        axes = np.atleast_1d(axes)
        _wave_row(run, step, columns, axes, frames.raw_parts, want_potential)
        if want_phase:
            _plot_phase_space(axes[-1], run, [step])
        fig.tight_layout()
        path = out / f"frame_{step:05d}.png"
        fig.savefig(path)
        plt.close(fig)
        written.append(path)

    # combined grid: one row per step; phase-space panel only when no steps
    n_rows = max(len(frames.steps), 1)
    n_cols = (len(columns) + (1 if want_phase else 0)) if frames.steps else 1
    fig, axes = plt.subplots(
        n_rows, max(n_cols, 1),
        figsize=(3.2 * max(n_cols, 1), 2.4 * n_rows),
        dpi=120,
        squeeze=False,
    )
    if frames.steps:
        for row, step in enumerate(frames.steps):
            _wave_row(run, step, columns, axes[row], frames.raw_parts, want_potential)
            if want_phase:
                _plot_phase_space(axes[row][-1], run, [step])
    else:
        _plot_phase_space(axes[0][0], run, [])
    fig.tight_layout()
    grid_path = out / "grid.png"
    fig.savefig(grid_path)
    plt.close(fig)
    written.append(grid_path)
    return written
