"""Compositing of artifacts onto images.

All functions are pure: the input image is never mutated, outputs are new
float32 arrays clipped to [0, 1].  Watermark and glass rendering depend only
on the parameter record; red-circle and sticker placement additionally jitter
per image from the supplied seed.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from ..errors import DimensionError, ValidationError
from ..images import as_image
from ..seeding import derive_seed
from .fonts import FONTS, render_text
from .specs import (
    ArtifactSpec,
    ExternalNoiseParams,
    GlassParams,
    RedCircleParams,
    StickerParams,
    WatermarkParams,
)
from .stickers import STICKERS

# Per-image jitter ranges (fractions of the frame) for the two artifact kinds
# whose placement varies within a subset.
_CIRCLE_JITTER = 0.08
_STICKER_POS_JITTER = 0.15
_STICKER_SCALE_JITTER = (0.75, 1.25)

# The glass displacement pattern repeats every this many flutes.
_GLASS_PERIOD = 6


def watermark_mask(params: WatermarkParams, height: int, width: int) -> np.ndarray:
    """Boolean coverage mask of the tiled, rotated watermark."""
    stamp = render_text(params.font_id, params.text)
    target_h = params.glyph_height * height
    scale = max(1, round(target_h / stamp.shape[0]))
    if stamp.shape[0] * scale < 4:
        raise ValidationError(
            f"watermark glyphs rasterize below 4 px ({stamp.shape[0] * scale} px) "
            f"for glyph_height={params.glyph_height} on height={height}"
        )
    stamp = np.repeat(np.repeat(stamp, scale, axis=0), scale, axis=1)
    sh, sw = stamp.shape

    mask = np.zeros((height, width), dtype=bool)
    cell_h = height / params.tile_rows
    cell_w = width / params.tile_cols
    for r in range(params.tile_rows):
        for c in range(params.tile_cols):
            cy = round((r + 0.5) * cell_h)
            cx = round((c + 0.5) * cell_w)
            top, left = cy - sh // 2, cx - sw // 2
            y0, x0 = max(0, top), max(0, left)
            y1, x1 = min(height, top + sh), min(width, left + sw)
            if y0 >= y1 or x0 >= x1:
                continue
            mask[y0:y1, x0:x1] |= stamp[y0 - top : y1 - top, x0 - left : x1 - left]

    if params.rotation != 0.0:
        mask = _rotate_nearest(mask, params.rotation)
    return mask


def _rotate_nearest(mask: np.ndarray, degrees: float) -> np.ndarray:
    """Rotate a boolean mask about the image center, nearest-neighbor."""
    h, w = mask.shape
    cy, cx = (h - 1) / 2.0, (w - 1) / 2.0
    theta = math.radians(degrees)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    ys, xs = np.mgrid[0:h, 0:w]
    dy, dx = ys - cy, xs - cx
    # inverse map: rotate output coords by -theta to find the source pixel
    src_y = np.rint(cos_t * dy + sin_t * dx + cy).astype(np.int64)
    src_x = np.rint(-sin_t * dy + cos_t * dx + cx).astype(np.int64)
    inside = (src_y >= 0) & (src_y < h) & (src_x >= 0) & (src_x < w)
    out = np.zeros_like(mask)
    out[inside] = mask[src_y[inside], src_x[inside]]
    return out


def _blend(img: np.ndarray, alpha: np.ndarray, color: np.ndarray) -> np.ndarray:
    """Alpha-blend a constant color; pixels with alpha == 0 pass through bitwise."""
    a = alpha[..., None].astype(np.float32)
    blended = (1.0 - a) * img + a * color[None, None, :].astype(np.float32)
    return np.where(a > 0.0, blended, img)


def _apply_watermark(img: np.ndarray, p: WatermarkParams) -> np.ndarray:
    mask = watermark_mask(p, img.shape[0], img.shape[1])
    return _blend(img, mask.astype(np.float32) * p.opacity, np.array(p.color))


def _apply_red_circle(
    img: np.ndarray, p: RedCircleParams, rng: np.random.Generator
) -> np.ndarray:
    h, w = img.shape[:2]
    jx, jy = rng.uniform(-_CIRCLE_JITTER, _CIRCLE_JITTER, size=2)
    cx = float(np.clip(p.center[0] + jx, 0.1, 0.9)) * w
    cy = float(np.clip(p.center[1] + jy, 0.1, 0.9)) * h
    r_px = p.radius * min(h, w)
    ys, xs = np.mgrid[0:h, 0:w]
    dist = np.hypot(ys - cy, xs - cx)
    ring = np.abs(dist - r_px) <= p.stroke_width / 2.0
    return _blend(img, ring.astype(np.float32), np.array(p.color))


def _resize_nearest_rgba(sprite: np.ndarray, size: int) -> np.ndarray:
    n = sprite.shape[0]
    idx = np.minimum((np.arange(size) * n) // size, n - 1)
    return sprite[idx][:, idx]


def _apply_sticker(
    img: np.ndarray, p: StickerParams, rng: np.random.Generator
) -> np.ndarray:
    h, w = img.shape[:2]
    scale = p.scale * rng.uniform(*_STICKER_SCALE_JITTER)
    jx, jy = rng.uniform(-_STICKER_POS_JITTER, _STICKER_POS_JITTER, size=2)
    px = float(np.clip(p.position[0] + jx, 0.1, 0.9)) * w
    py = float(np.clip(p.position[1] + jy, 0.1, 0.9)) * h
    size = max(2, round(scale * min(h, w)))
    sprite = _resize_nearest_rgba(STICKERS[p.asset_id], size)

    top, left = round(py) - size // 2, round(px) - size // 2
    y0, x0 = max(0, top), max(0, left)
    y1, x1 = min(h, top + size), min(w, left + size)
    if y0 >= y1 or x0 >= x1:
        return img.copy()
    alpha = np.zeros((h, w), dtype=np.float32)
    rgb_patch = sprite[y0 - top : y1 - top, x0 - left : x1 - left, :3]
    alpha[y0:y1, x0:x1] = sprite[y0 - top : y1 - top, x0 - left : x1 - left, 3]

    a = alpha[..., None]
    out = img.copy()
    region = (1.0 - a[y0:y1, x0:x1]) * img[y0:y1, x0:x1] + a[y0:y1, x0:x1] * rgb_patch
    patch = np.where(a[y0:y1, x0:x1] > 0.0, region, img[y0:y1, x0:x1])
    out[y0:y1, x0:x1] = patch
    return out


def _apply_glass(img: np.ndarray, p: GlassParams) -> np.ndarray:
    h, w = img.shape[:2]
    cols = np.arange(w)
    flute = cols // p.flute_width
    shift = np.rint(
        p.displacement * np.sin(2.0 * math.pi * flute / _GLASS_PERIOD)
    ).astype(np.int64)
    src = np.clip(cols - shift, 0, w - 1)
    out = img[:, src, :]

    if p.blur_radius > 0:
        blurred = np.empty_like(out)
        r = p.blur_radius
        for f in range(int(flute.max()) + 1):
            sel = np.nonzero(flute == f)[0]
            seg = out[:, sel, :]
            n = seg.shape[1]
            csum = np.concatenate(
                [np.zeros((h, 1, 3), dtype=np.float64), np.cumsum(seg, axis=1)], axis=1
            )
            lo = np.maximum(np.arange(n) - r, 0)
            hi = np.minimum(np.arange(n) + r + 1, n)
            blurred[:, sel, :] = (csum[:, hi, :] - csum[:, lo, :]) / (hi - lo)[
                None, :, None
            ]
        out = blurred
    return out.astype(np.float32)


def _apply_external_noise(img: np.ndarray, p: ExternalNoiseParams) -> np.ndarray:
    noise = np.load(Path(p.path))
    if noise.ndim == 2:
        noise = noise[:, :, None]
    if noise.shape[:2] != img.shape[:2] or noise.shape[2] not in (1, 3):
        raise DimensionError(
            f"noise map shape {noise.shape} does not match image {img.shape}"
        )
    bounded = np.clip(noise.astype(np.float32), -p.clamp, p.clamp)
    return img + bounded


def apply_artifact(
    image: np.ndarray, spec: ArtifactSpec, seed: int, validate: bool = True
) -> np.ndarray:
    """Composite ``spec`` onto ``image``; returns a new clipped float32 array."""
    img = as_image(image)
    if validate:
        spec.validate()
    rng = np.random.default_rng(derive_seed(seed, spec.artifact_id))

    if spec.kind == "watermark":
        out = _apply_watermark(img, spec.params)
    elif spec.kind == "red_circle":
        out = _apply_red_circle(img, spec.params, rng)
    elif spec.kind == "sticker":
        out = _apply_sticker(img, spec.params, rng)
    elif spec.kind == "glass":
        out = _apply_glass(img, spec.params)
    elif spec.kind == "external_noise":
        out = _apply_external_noise(img, spec.params)
    else:  # pragma: no cover - guarded by ArtifactSpec.__post_init__
        raise ValidationError(f"unknown artifact kind {spec.kind!r}")

    return np.clip(out, 0.0, 1.0).astype(np.float32)
