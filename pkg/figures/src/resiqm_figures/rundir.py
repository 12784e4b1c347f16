"""Read access to a simulation run directory.

Layout (produced by the simulation CLI):

    manifest.json            config echo + version string
    series.csv               t,q_cl,p_cl,q_exp,p_exp,norm,energy
    snapshots/NNNNN.csv      x,re,im   (frame wave function)
    snapshots_psi/NNNNN.csv  x,re,im   (lab wave function, moving grid)

The potential overlay is rebuilt from the manifest's config echo, so the
renderer stays decoupled from the simulation package.
"""

import json
import math
from pathlib import Path

import numpy as np


def _bump(q):
    q = np.asarray(q, dtype=float)
    u = 1.0 - q**2
    out = np.zeros_like(q)
    mask = u > 1e-12
    out[mask] = np.exp(-1.0 / u[mask])
    return out


def _bump_first(q):
    q = np.asarray(q, dtype=float)
    u = 1.0 - q**2
    out = np.zeros_like(q)
    mask = u > 1e-12
    out[mask] = np.exp(-1.0 / u[mask]) * (-2.0 * q[mask] / u[mask] ** 2)
    return out


_POTENTIALS = {
    "free": (lambda p, q: np.zeros_like(np.asarray(q, dtype=float)),
             lambda p, q: np.zeros_like(np.asarray(q, dtype=float))),
    "harmonic": (lambda p, q: 0.5 * p["m"] * p["omega"] ** 2 * np.asarray(q) ** 2,
                 lambda p, q: p["m"] * p["omega"] ** 2 * np.asarray(q)),
    "quartic": (lambda p, q: 0.5 * np.asarray(q) ** 2 + np.asarray(q) ** 4 / 6.0,
                lambda p, q: np.asarray(q) + 2.0 * np.asarray(q) ** 3 / 3.0),
    "morse": (lambda p, q: p["D"] * (1.0 - np.exp(-p["a"] * np.asarray(q))) ** 2,
              lambda p, q: 2 * p["a"] * p["D"] * np.exp(-p["a"] * np.asarray(q))
              * (1.0 - np.exp(-p["a"] * np.asarray(q)))),
    "barrier_harmonic": (
        lambda p, q: (1.0 + 0.5 * np.asarray(q) ** 2)
        * (1.0 + p["a"] * np.exp(-np.asarray(q) ** 2 / (2.0 * p["b"]))) - 1.0,
        lambda p, q: np.asarray(q)
        * (1.0 + p["a"] * np.exp(-np.asarray(q) ** 2 / (2.0 * p["b"])))
        + (1.0 + 0.5 * np.asarray(q) ** 2) * p["a"]
        * (-np.asarray(q) / p["b"]) * np.exp(-np.asarray(q) ** 2 / (2.0 * p["b"])),
    ),
    "compact_bump": (lambda p, q: _bump(q), lambda p, q: _bump_first(q)),
}


class RunDir:
    """Lazy view of one run directory."""

    def __init__(self, path):
        self.path = Path(path)
        manifest_path = self.path / "manifest.json"
        if not manifest_path.exists():
            raise FileNotFoundError(f"{self.path} is not a run directory (no manifest.json)")
        self.manifest = json.loads(manifest_path.read_text())
        self.config = self.manifest.get("config", {})

        series = np.loadtxt(self.path / "series.csv", delimiter=",", skiprows=1)
        series = np.atleast_2d(series)
        self.t = series[:, 0]
        self.q_cl = series[:, 1]
        self.p_cl = series[:, 2]
        self.q_exp = series[:, 3]
        self.p_exp = series[:, 4]
        self.norm = series[:, 5]
        self.energy = series[:, 6]

    def available_steps(self, kind="snapshots"):
        folder = self.path / kind
        if not folder.is_dir():
            return []
        return sorted(int(f.stem) for f in folder.glob("*.csv"))

    def snapshot(self, step, kind="snapshots"):
        path = self.path / kind / f"{step:05d}.csv"
        if not path.exists():
            available = self.available_steps(kind)
            raise FileNotFoundError(
                f"no {kind} snapshot for step {step}; available: {available}"
            )
        data = np.atleast_2d(np.loadtxt(path, delimiter=",", skiprows=1))
        return data[:, 0], data[:, 1] + 1j * data[:, 2]

    def _potential_funcs(self):
        spec = self.config.get("potential", {})
        tag = spec.get("type")
        if tag not in _POTENTIALS:
            return None
        value, first = _POTENTIALS[tag]
        return lambda q: value(spec, q), lambda q: first(spec, q)

    def potential_on(self, x):
        """V(x) for the lab-frame panel, or None when unknown."""
        funcs = self._potential_funcs()
        return None if funcs is None else funcs[0](x)

    def effective_potential_on(self, x, step):
        """Taylor remainder of V around the frame point at the given step."""
        funcs = self._potential_funcs()
        if funcs is None:
            return None
        value, first = funcs
        q = float(np.interp(step, np.arange(len(self.q_cl)), self.q_cl))
        return value(q + np.asarray(x)) - value(q) - np.asarray(x) * first(q)
