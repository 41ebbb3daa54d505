"""File formats: profile/sample CSVs, sweep CSVs, report JSON.

All numbers are written with 15 significant digits and files are written
atomically (temp + rename), so identical configurations produce
byte-identical outputs.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Iterable

import numpy as np

from .radial import RadialGrid, RadialProfile, grid_from_nodes, \
    profile_from_samples

FLOAT_FMT = "%.15g"


def _atomic_write_text(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def fmt(x) -> str:
    return FLOAT_FMT % float(x)


def write_profile_csv(path: str, profile: RadialProfile) -> None:
    """Radial profile CSV: header ``r,re,im``, one node per line."""
    lines = ["r,re,im"]
    for r, v in zip(profile.grid.nodes, profile.values):
        lines.append(f"{fmt(r)},{fmt(v.real)},{fmt(v.imag)}")
    _atomic_write_text(path, "\n".join(lines) + "\n")


def read_profile_csv(path: str) -> RadialProfile:
    """Parse a profile CSV; schema violations raise ``ValueError``."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty profile file")
    if lines[0].replace(" ", "") != "r,re,im":
        raise ValueError(f"{path}: expected header 'r,re,im', got {lines[0]!r}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 3:
            raise ValueError(f"{path}: malformed row {ln!r}")
        try:
            rows.append(tuple(float(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"{path}: non-numeric row {ln!r}") from exc
    if len(rows) < 2:
        raise ValueError(f"{path}: a profile needs at least two rows")
    r = np.array([row[0] for row in rows])
    if np.any(np.diff(r) <= 0.0):
        raise ValueError(f"{path}: radii must be strictly increasing")
    if r[0] < 0.0:
        raise ValueError(f"{path}: radii must be nonnegative")
    vals = np.array([complex(row[1], row[2]) for row in rows])
    return profile_from_samples(grid_from_nodes(r), vals)


def write_line_csv(path: str, x: np.ndarray, values: np.ndarray) -> None:
    """Symmetric-grid function CSV: header ``x,re,im``."""
    lines = ["x,re,im"]
    for xi, v in zip(x, values):
        lines.append(f"{fmt(xi)},{fmt(v.real)},{fmt(v.imag)}")
    _atomic_write_text(path, "\n".join(lines) + "\n")


def write_symbol_csv(path: str, rho: np.ndarray, values: np.ndarray) -> None:
    """Multiplier symbol table CSV: header ``rho,re,im``."""
    lines = ["rho,re,im"]
    for r, v in zip(rho, np.asarray(values, dtype=complex)):
        lines.append(f"{fmt(r)},{fmt(v.real)},{fmt(v.imag)}")
    _atomic_write_text(path, "\n".join(lines) + "\n")


def write_sweep_csv(path: str, rows: Iterable) -> None:
    """Sweep table CSV with columns ``p,q,family,lambda,t,ratio``."""
    lines = ["p,q,family,lambda,t,ratio"]
    for row in rows:
        q = "inf" if row.q == np.inf else fmt(row.q)
        lines.append(f"{fmt(row.p)},{q},{row.family},{fmt(row.lam)},"
                     f"{fmt(row.t)},{fmt(row.ratio)}")
    _atomic_write_text(path, "\n".join(lines) + "\n")


def write_report_json(path: str, payload: dict) -> None:
    _atomic_write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")
