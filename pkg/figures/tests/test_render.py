import json
import math

import numpy as np
import pytest

from resiqm_figures import FrameSpec, RunDir, render


def make_run_dir(root, steps=(0, 2), n_steps=4):
    """Write a miniature run directory in the documented format."""
    root.mkdir(parents=True, exist_ok=True)
    manifest = {
        "version": "resiqm 0.1.0",
        "config": {
            "potential": {"type": "harmonic", "m": 1.0, "omega": 1.0},
            "params": {"hbar": 0.001, "mass": 1.0},
            "method": "residual",
        },
    }
    (root / "manifest.json").write_text(json.dumps(manifest))
    lines = ["t,q_cl,p_cl,q_exp,p_exp,norm,energy"]
    for i in range(n_steps + 1):
        t = 0.1 * i
        lines.append(
            f"{t},{0.6*math.cos(t)},{-0.6*math.sin(t)},"
            f"{0.6*math.cos(t)},{-0.6*math.sin(t)},1.0,0.18"
        )
    (root / "series.csv").write_text("\n".join(lines) + "\n")
    x = np.linspace(-0.2, 0.2, 64)
    for kind in ("snapshots", "snapshots_psi"):
        folder = root / kind
        folder.mkdir()
        for step in steps:
            wave = np.exp(-(x**2) / 0.002) * np.exp(1j * step * x)
            rows = ["x,re,im"] + [
                f"{xi:.17g},{v.real:.17g},{v.imag:.17g}" for xi, v in zip(x, wave)
            ]
            (folder / f"{step:05d}.csv").write_text("\n".join(rows) + "\n")
    return root


def snapshot_tree(root):
    return sorted((p.name, p.stat().st_size) for p in root.rglob("*") if p.is_file())


def test_render_produces_frame_and_grid_files(tmp_path):
    run = make_run_dir(tmp_path / "run")
    out = tmp_path / "figs"
    written = render(FrameSpec(run_dir=str(run), steps=(0, 2)), out)
    names = {p.name for p in written}
    assert names == {"frame_00000.png", "frame_00002.png", "grid.png"}
    for p in written:
        assert p.stat().st_size > 0


def test_render_is_read_only(tmp_path):
    run = make_run_dir(tmp_path / "run")
    before = snapshot_tree(run)
    render(FrameSpec(run_dir=str(run), steps=(0,)), tmp_path / "figs")
    assert snapshot_tree(run) == before


def test_empty_steps_gives_phase_space_grid(tmp_path):
    run = make_run_dir(tmp_path / "run")
    written = render(FrameSpec(run_dir=str(run), steps=()), tmp_path / "figs")
    assert [p.name for p in written] == ["grid.png"]
    assert written[0].stat().st_size > 0


def test_missing_step_error_lists_available(tmp_path):
    run = make_run_dir(tmp_path / "run")
    with pytest.raises(FileNotFoundError, match=r"\[0, 2\]"):
        render(FrameSpec(run_dir=str(run), steps=(99999,)), tmp_path / "figs")


def test_rerun_is_byte_stable(tmp_path):
    run = make_run_dir(tmp_path / "run")
    spec = FrameSpec(run_dir=str(run), steps=(0, 2))
    render(spec, tmp_path / "a")
    render(spec, tmp_path / "b")
    for name in ("frame_00000.png", "frame_00002.png", "grid.png"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_raw_parts_mode(tmp_path):
    run = make_run_dir(tmp_path / "run")
    moduli = render(FrameSpec(run_dir=str(run), steps=(2,)), tmp_path / "m")
    raw = render(FrameSpec(run_dir=str(run), steps=(2,), raw_parts=True), tmp_path / "r")
    assert moduli[0].read_bytes() != raw[0].read_bytes()


def test_unknown_panel_rejected(tmp_path):
    with pytest.raises(ValueError, match="unknown panels"):
        FrameSpec(run_dir="x", steps=(), show=("psi", "spectrogram"))


def test_rundir_potential_overlays(tmp_path):
    run = RunDir(make_run_dir(tmp_path / "run"))
    x = np.linspace(-0.2, 0.2, 11)
    v = run.potential_on(x)
    assert v == pytest.approx(0.5 * x**2)
    # step 0 sits at q = 0.6; harmonic remainder is frame independent
    veff = run.effective_potential_on(x, 0)
    assert veff == pytest.approx(0.5 * x**2, abs=1e-12)


def test_rundir_rejects_non_run_directory(tmp_path):
    with pytest.raises(FileNotFoundError, match="manifest"):
        RunDir(tmp_path)
