"""Parametric artifact descriptions and their JSON schema.

An :class:`ArtifactSpec` pairs a stable ``artifact_id`` with one of five
parameter records.  Two specs denote the same artifact *type* when their kind
and full parameter record are equal, regardless of id; that equality is what
separates in-distribution from out-of-distribution test artifacts.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

from ..errors import ValidationError
from .fonts import FONTS, render_text
from .stickers import STICKERS


def _check_unit(name: str, value: float, lo_open: bool = True) -> None:
    lo_ok = value > 0.0 if lo_open else value >= 0.0
    if not (lo_ok and value < 1.0):
        raise ValidationError(f"{name} must lie in (0, 1), got {value}")


def _check_rgb(name: str, color: tuple[float, float, float]) -> None:
    if len(color) != 3 or any(not (0.0 <= c <= 1.0) for c in color):
        raise ValidationError(f"{name} must be an RGB triple in [0, 1], got {color}")


@dataclass(frozen=True)
class WatermarkParams:
    """Tiled text watermark.

    Rendering is fully determined by the record: the text is rasterized from
    the embedded font, integer-upscaled to ``glyph_height`` (a fraction of
    image height), stamped centered in each cell of a ``tile_rows`` x
    ``tile_cols`` grid, rotated about the image center, and alpha-blended.
    """

    text: str
    font_id: str = "block5x7"
    glyph_height: float = 0.12
    rotation: float = 0.0
    color: tuple[float, float, float] = (1.0, 1.0, 1.0)
    opacity: float = 0.6
    tile_rows: int = 3
    tile_cols: int = 3

    def validate(self) -> None:
        render_text(self.font_id, self.text)  # raises on empty/unknown glyphs
        if not (0.0 < self.glyph_height <= 0.5):
            raise ValidationError(f"glyph_height must be in (0, 0.5], got {self.glyph_height}")
        if not (-90.0 <= self.rotation <= 90.0):
            raise ValidationError(f"rotation must be in [-90, 90], got {self.rotation}")
        _check_rgb("watermark color", self.color)
        if not (0.0 < self.opacity <= 1.0):
            raise ValidationError(f"opacity must be in (0, 1], got {self.opacity}")
        if self.tile_rows < 1 or self.tile_cols < 1:
            raise ValidationError("tile_rows/tile_cols must be positive")


@dataclass(frozen=True)
class RedCircleParams:
    """Circular ring annotation; placement jitters per image."""

    center: tuple[float, float] = (0.5, 0.5)  # (cx, cy) fractions
    radius: float = 0.25  # fraction of min(H, W)
    stroke_width: float = 2.0  # pixels
    color: tuple[float, float, float] = (1.0, 0.0, 0.0)

    def validate(self) -> None:
        _check_unit("center x", self.center[0])
        _check_unit("center y", self.center[1])
        _check_unit("radius", self.radius)
        if self.stroke_width <= 0:
            raise ValidationError(f"stroke_width must be positive, got {self.stroke_width}")
        _check_rgb("circle color", self.color)


@dataclass(frozen=True)
class StickerParams:
    """Embedded RGBA sprite; scale and position jitter per image."""

    asset_id: str = "star"
    scale: float = 0.3  # fraction of min(H, W)
    position: tuple[float, float] = (0.5, 0.5)  # sprite center, (px, py) fractions

    def validate(self) -> None:
        if self.asset_id not in STICKERS:
            raise ValidationError(f"unknown sticker asset {self.asset_id!r}; have {sorted(STICKERS)}")
        _check_unit("sticker scale", self.scale)
        _check_unit("position x", self.position[0])
        _check_unit("position y", self.position[1])


@dataclass(frozen=True)
class GlassParams:
    """Fluted-glass distortion: per-flute horizontal sine displacement + box blur."""

    flute_width: int = 6  # pixels per vertical flute
    displacement: float = 3.0  # peak horizontal shift, pixels
    blur_radius: int = 2  # horizontal box-blur half-width, pixels

    def validate(self) -> None:
        if self.flute_width < 1:
            raise ValidationError(f"flute_width must be >= 1, got {self.flute_width}")
        if self.displacement < 0:
            raise ValidationError(f"displacement must be >= 0, got {self.displacement}")
        if self.blur_radius < 0:
            raise ValidationError(f"blur_radius must be >= 0, got {self.blur_radius}")


@dataclass(frozen=True)
class ExternalNoiseParams:
    """Additive noise map supplied from outside (application only)."""

    path: str = ""
    clamp: float = 8.0 / 255.0  # max-abs bound applied to the map

    def validate(self) -> None:
        if not self.path:
            raise ValidationError("external_noise requires a path to a noise map (.npy)")
        if self.clamp <= 0:
            raise ValidationError(f"clamp bound must be positive, got {self.clamp}")


_PARAM_TYPES: dict[str, type] = {
    "watermark": WatermarkParams,
    "red_circle": RedCircleParams,
    "sticker": StickerParams,
    "glass": GlassParams,
    "external_noise": ExternalNoiseParams,
}


@dataclass(frozen=True)
class ArtifactSpec:
    artifact_id: str
    kind: str
    params: Any = field(default=None)

    def __post_init__(self) -> None:
        if self.kind not in _PARAM_TYPES:
            raise ValidationError(f"unknown artifact kind {self.kind!r}; have {sorted(_PARAM_TYPES)}")
        expected = _PARAM_TYPES[self.kind]
        if not isinstance(self.params, expected):
            raise ValidationError(
                f"artifact {self.artifact_id!r}: params must be {expected.__name__}, got {type(self.params).__name__}"
            )

    def validate(self) -> None:
        if not self.artifact_id:
            raise ValidationError("artifact_id must be non-empty")
        self.params.validate()

    def record(self) -> dict:
        """Kind + full parameter record (id excluded); basis for ID/OOD equality."""
        return {"kind": self.kind, "params": asdict(self.params)}

    def to_json_dict(self) -> dict:
        return {"artifact_id": self.artifact_id, **self.record()}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ArtifactSpec":
        try:
            kind = obj["kind"]
            params_cls = _PARAM_TYPES[kind]
        except KeyError as exc:
            raise ValidationError(f"bad artifact record: {obj!r}") from exc
        raw = dict(obj["params"])
        for key, val in raw.items():
            if isinstance(val, list):
                raw[key] = tuple(val)
        return cls(artifact_id=obj["artifact_id"], kind=kind, params=params_cls(**raw))


def same_record(a: ArtifactSpec, b: ArtifactSpec) -> bool:
    return a.record() == b.record()
