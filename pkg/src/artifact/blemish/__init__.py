"""Synthesis of parametric image artifacts and paired clean/blemished datasets."""

from .specs import (
    ArtifactSpec,
    ExternalNoiseParams,
    GlassParams,
    RedCircleParams,
    StickerParams,
    WatermarkParams,
)
from .apply import apply_artifact
from .dataset import (
    PairedDataset,
    SubjectSet,
    build_dataset,
    load_dataset,
    save_dataset,
    split_artifacts_id_ood,
)

__all__ = [
    "ArtifactSpec",
    "WatermarkParams",
    "RedCircleParams",
    "StickerParams",
    "GlassParams",
    "ExternalNoiseParams",
    "apply_artifact",
    "SubjectSet",
    "PairedDataset",
    "build_dataset",
    "save_dataset",
    "load_dataset",
    "split_artifacts_id_ood",
]
