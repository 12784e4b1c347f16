"""Render simulation run directories into the standard figure layouts:
wave-function columns with a potential overlay plus a phase-space panel.

The renderer only reads the documented run-directory files
(manifest.json, series.csv, snapshots/NNNNN.csv, snapshots_psi/NNNNN.csv)
and never imports the simulation package.
"""

__version__ = "0.1.0"

from .frames import FrameSpec, render
from .rundir import RunDir

__all__ = ["FrameSpec", "render", "RunDir"]
