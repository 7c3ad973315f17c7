"""Procedurally drawn RGBA sticker sprites.

Sprites are generated once at import time from closed-form masks on a 33x33
grid, so the asset table is reproducible without binary blobs.
"""

from __future__ import annotations

import numpy as np

_N = 33


def _grid() -> tuple[np.ndarray, np.ndarray]:
    c = (_N - 1) / 2.0
    ys, xs = np.mgrid[0:_N, 0:_N]
    # u right, v up, both in [-1, 1]
    return (xs - c) / c, (c - ys) / c


def _in_triangle(u, v, p0, p1, p2):
    def side(a, b):
        return (b[0] - a[0]) * (v - a[1]) - (b[1] - a[1]) * (u - a[0])

    d0, d1, d2 = side(p0, p1), side(p1, p2), side(p2, p0)
    neg = (d0 < 0) | (d1 < 0) | (d2 < 0)
    pos = (d0 > 0) | (d1 > 0) | (d2 > 0)
    return ~(neg & pos)


def _sprite(rgb_mask_pairs) -> np.ndarray:
    out = np.zeros((_N, _N, 4), dtype=np.float32)
    for color, mask in rgb_mask_pairs:
        for c in range(3):
            out[..., c] = np.where(mask, color[c], out[..., c])
        out[..., 3] = np.where(mask, 1.0, out[..., 3])
    return out


def _make_star() -> np.ndarray:
    u, v = _grid()
    up = _in_triangle(u, v, (0.0, 0.95), (-0.8, -0.45), (0.8, -0.45))
    down = _in_triangle(u, v, (0.0, -0.95), (-0.8, 0.45), (0.8, 0.45))
    return _sprite([((1.0, 0.85, 0.1), up | down)])


def _make_smiley() -> np.ndarray:
    u, v = _grid()
    r2 = u * u + v * v
    face = r2 <= 0.92**2
    eye_l = (u + 0.33) ** 2 + (v - 0.28) ** 2 <= 0.13**2
    eye_r = (u - 0.33) ** 2 + (v - 0.28) ** 2 <= 0.13**2
    r = np.sqrt(r2)
    mouth = (r >= 0.48) & (r <= 0.64) & (v < -0.12)
    return _sprite(
        [((1.0, 0.8, 0.0), face), ((0.05, 0.05, 0.05), eye_l | eye_r | mouth)]
    )


def _make_heart() -> np.ndarray:
    u, v = _grid()
    x = u * 1.25
    y = v * 1.25 + 0.25
    f = (x * x + y * y - 1.0) ** 3 - x * x * y**3
    return _sprite([((0.9, 0.08, 0.15), f <= 0.0)])


STICKERS: dict[str, np.ndarray] = {
    "star": _make_star(),
    "smiley": _make_smiley(),
    "heart": _make_heart(),
}
