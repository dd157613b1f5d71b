"""Shared helpers for the test suite."""
from __future__ import annotations

import numpy as np

from pyraclip import Point3, Segment3

GRID = 1024  # dyadic grid used by random corpora: coordinates k/1024


def seg(a, b) -> Segment3:
    return Segment3(Point3(*a), Point3(*b))


def random_grid_segments(seed: int, n: int, zmin: int = 1) -> list[tuple[float, ...]]:
    """Random dyadic segments over the box [-8, 8]^2 x (0, 8], mixed regions."""
    rng = np.random.default_rng(seed)
    z = rng.integers(zmin, 8 * GRID + 1, size=(n, 2))
    x = rng.integers(-8 * GRID, 8 * GRID + 1, size=(n, 2))
    y = rng.integers(-8 * GRID, 8 * GRID + 1, size=(n, 2))
    cols = [
        (c.astype(float) / GRID).tolist()
        for c in (x[:, 0], y[:, 0], z[:, 0], x[:, 1], y[:, 1], z[:, 1])
    ]
    return list(zip(*cols))


def random_grid_points(seed: int, n: int, allow_z0: bool = True) -> list[tuple[float, float, float]]:
    rng = np.random.default_rng(seed)
    z = rng.integers(0 if allow_z0 else 1, 8 * GRID + 1, size=n)
    x = rng.integers(-8 * GRID, 8 * GRID + 1, size=n)
    y = rng.integers(-8 * GRID, 8 * GRID + 1, size=n)
    cols = [(c.astype(float) / GRID).tolist() for c in (x, y, z)]
    return list(zip(*cols))


def rotate_tuple(s: tuple[float, ...], k: int) -> tuple[float, ...]:
    xa, ya, za, xb, yb, zb = s
    for _ in range(k % 4):
        xa, ya = -ya, xa
        xb, yb = -yb, xb
    return (xa, ya, za, xb, yb, zb)
