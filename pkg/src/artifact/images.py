"""Raster image helpers.

An image is a float32 numpy array of shape (H, W, 3) with values in [0, 1].
All pixel math in the package goes through arrays of this form; PNG files are
the only at-rest representation.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from .errors import ValidationError


def validate_image(arr: np.ndarray) -> None:
    if not isinstance(arr, np.ndarray):
        raise ValidationError(f"image must be a numpy array, got {type(arr)!r}")
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValidationError(f"image must have shape (H, W, 3), got {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValidationError(f"image dims must be positive, got {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValidationError("image contains non-finite values")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise ValidationError(
            f"image values must lie in [0, 1], got [{arr.min()}, {arr.max()}]"
        )


def as_image(arr: np.ndarray) -> np.ndarray:
    """Cast to float32 and validate."""
    out = np.asarray(arr, dtype=np.float32)
    validate_image(out)
    return out


def save_png(arr: np.ndarray, path: str | Path) -> None:
    """Quantize to 8 bits and write a lossless PNG."""
    validate_image(arr)
    q = np.round(arr * 255.0).astype(np.uint8)
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(q, mode="RGB").save(path, format="PNG")


def load_png(path: str | Path) -> np.ndarray:
    with Image.open(path) as im:
        arr = np.asarray(im.convert("RGB"), dtype=np.float32) / 255.0
    return arr


def grayscale(arr: np.ndarray) -> np.ndarray:
    """Luma (Rec. 601 weights), shape (H, W)."""
    return 0.299 * arr[..., 0] + 0.587 * arr[..., 1] + 0.114 * arr[..., 2]


def resize_bilinear(arr: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resize with half-pixel centers.  Works on (H, W) or (H, W, C)."""
    in_h, in_w = arr.shape[:2]
    if (in_h, in_w) == (out_h, out_w):
        return arr.astype(np.float32).copy()
    ys = (np.arange(out_h) + 0.5) * (in_h / out_h) - 0.5
    xs = (np.arange(out_w) + 0.5) * (in_w / out_w) - 0.5
    ys = np.clip(ys, 0.0, in_h - 1.0)
    xs = np.clip(xs, 0.0, in_w - 1.0)
    y0 = np.floor(ys).astype(np.int64)
    x0 = np.floor(xs).astype(np.int64)
    y1 = np.minimum(y0 + 1, in_h - 1)
    x1 = np.minimum(x0 + 1, in_w - 1)
    wy = (ys - y0).astype(np.float32)
    wx = (xs - x0).astype(np.float32)

    src = arr.astype(np.float32)
    if src.ndim == 2:
        src = src[:, :, None]
    top = src[y0][:, x0] * (1 - wx)[None, :, None] + src[y0][:, x1] * wx[None, :, None]
    bot = src[y1][:, x0] * (1 - wx)[None, :, None] + src[y1][:, x1] * wx[None, :, None]
    out = top * (1 - wy)[:, None, None] + bot * wy[:, None, None]
    if arr.ndim == 2:
        out = out[:, :, 0]
    return out
