"""Quartic oscillator: co-moving frame vs Gaussian wave packet transform.

Both formulations rewrite the same dynamics exactly; only discretization
separates them. The co-moving frame solves a PDE for the full residual
wave function, while the transform evolves three beam numbers (A, M) by
an ODE plus a slowly varying correction factor kappa. This script runs
both for a tenth of a period and reports their L2 distance.

Run from the repository root:  python3 demos/02_quartic_gwpt.py
"""

import numpy as np

from resiqm import load_config_file, run_scenario

cfg_residual = load_config_file("configs/example2_quartic.json")
cfg_residual.n_steps = 100
cfg_residual.snapshot_every = 100
cfg_residual.output_dir = None
rec_residual = run_scenario(cfg_residual)

cfg_gwpt = load_config_file("configs/example2_quartic_gwpt.json")
cfg_gwpt.output_dir = "runs/example2_quartic_gwpt"
rec_gwpt = run_scenario(cfg_gwpt)

phi_r = rec_residual.snapshots[100]
phi_g = rec_gwpt.snapshots[100]
dx = phi_r.grid.dx
dist = np.sqrt(np.trapezoid(np.abs(phi_g.values - phi_r.values) ** 2, dx=dx))
scale = np.sqrt(np.trapezoid(np.abs(phi_r.values) ** 2, dx=dx))
print(f"relative L2 distance after 100 steps: {dist / scale:.2e}")
print("the effective potential is genuinely time-dependent here, unlike the")
print("harmonic case, yet the residual wave function stays confined and smooth")

# the full-period run of the paper's figure
cfg_full = load_config_file("configs/example2_quartic.json")
rec_full = run_scenario(cfg_full)
radius = np.hypot(np.array(rec_full.q_exp), np.array(rec_full.p_exp))
print(f"phase-space 'radius' now breathes: {radius.min():.4f} .. {radius.max():.4f}")
print(f"outputs written to {cfg_full.output_dir}")
