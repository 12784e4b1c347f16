"""Plane-wave scattering off a compact bump: why the momentum frame helps.

An incoming wave of momentum p is incompatible with Neumann boundaries in
the lab frame (its derivative never vanishes), so reflections pollute the
solution immediately. In a frame moving with momentum p the same wave is
the constant function 1, for which Neumann boundaries are exact; boundary
artifacts only appear once the physical scattered field arrives.

Run from the repository root:  python3 demos/05_scattering_frame.py
"""

import numpy as np

from resiqm import load_config_file, run_scenario

frame_cfg = load_config_file("configs/example5_scattering.json")
frame_cfg.output_dir = "runs/example5_scattering"
frame_rec = run_scenario(frame_cfg)

lab_cfg = load_config_file("configs/example5_scattering_lab_frame.json")
lab_cfg.output_dir = "runs/example5_scattering_lab_frame"
lab_rec = run_scenario(lab_cfg)


def boundary_modulus_dev(rec, step):
    wf = rec.snapshots[step]
    return max(abs(abs(wf.values[0]) - 1.0), abs(abs(wf.values[-1]) - 1.0))


print("deviation of |wave| from 1 at the grid edges:")
print("  step   co-moving frame   lab frame")
for step in (150, 300, 450, 600, 750):
    print(f"  {step:>4}   {boundary_modulus_dev(frame_rec, step):>12.2e}"
          f"   {boundary_modulus_dev(lab_rec, step):>9.2e}")
print("the frame run stays clean until the scattered field physically reaches")
print("the edges (speed ~ p/m inward/outward), the lab run is polluted from step 1")
print(f"outputs written to {frame_cfg.output_dir} and {lab_cfg.output_dir}")
