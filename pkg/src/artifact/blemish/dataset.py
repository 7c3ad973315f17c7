"""Paired clean/blemished dataset construction and on-disk layout.

Layout under a dataset root::

    manifest.json
    <subject_id>/clean/<iii>.png
    <subject_id>/<artifact_id>/<iii>.png

Per-image seeds are derived from (root seed, subject_id, artifact_id, image
index), so rebuilding the dataset is byte-identical.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import ValidationError
from ..images import load_png, save_png, validate_image
from ..seeding import derive_seed, np_rng
from .apply import apply_artifact
from .specs import ArtifactSpec, same_record


@dataclass
class SubjectSet:
    """Ordered images of one subject plus free-form provenance labels."""

    subject_id: str
    images: list[np.ndarray]
    provenance: dict = field(default_factory=dict)

    def validate(self) -> None:
        if not self.subject_id:
            raise ValidationError("subject_id must be non-empty")
        if len(self.images) < 1:
            raise ValidationError(f"subject {self.subject_id!r} has no images")
        dims = {img.shape for img in self.images}
        if len(dims) != 1:
            raise ValidationError(
                f"subject {self.subject_id!r} mixes image shapes: {sorted(dims)}"
            )
        for img in self.images:
            validate_image(img)


@dataclass
class PairedDataset:
    subjects: list[SubjectSet]
    artifacts: list[ArtifactSpec]
    blemished: dict[tuple[str, str], SubjectSet]
    unblemished_ratio: float
    seed: int

    def clean(self, subject_id: str) -> SubjectSet:
        for s in self.subjects:
            if s.subject_id == subject_id:
                return s
        raise KeyError(subject_id)

    def validate(self) -> None:
        expected = {
            (s.subject_id, a.artifact_id) for s in self.subjects for a in self.artifacts
        }
        if set(self.blemished) != expected:
            raise ValidationError("blemished map does not cover subjects x artifacts")
        for s in self.subjects:
            for a in self.artifacts:
                if len(self.blemished[(s.subject_id, a.artifact_id)].images) != len(s.images):
                    raise ValidationError(
                        f"blemished subset {(s.subject_id, a.artifact_id)} image count mismatch"
                    )


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def build_dataset(
    clean: list[SubjectSet],
    artifacts: list[ArtifactSpec],
    unblemished_ratio: float,
    seed: int,
) -> PairedDataset:
    """Apply every artifact to every subject subset, keeping a seeded
    round(ratio * M) of images byte-identical to their clean counterparts."""
    if not clean:
        raise ValidationError("need at least one subject set")
    if not artifacts:
        raise ValidationError("need at least one artifact")
    if not (0.0 <= unblemished_ratio <= 1.0):
        raise ValidationError(f"unblemished_ratio must be in [0, 1], got {unblemished_ratio}")
    ids = [a.artifact_id for a in artifacts]
    if len(set(ids)) != len(ids):
        raise ValidationError(f"duplicate artifact_id in {ids}")
    sids = [s.subject_id for s in clean]
    if len(set(sids)) != len(sids):
        raise ValidationError(f"duplicate subject_id in {sids}")
    for s in clean:
        s.validate()
    for a in artifacts:
        a.validate()

    blemished: dict[tuple[str, str], SubjectSet] = {}
    for subj in clean:
        m = len(subj.images)
        for spec in artifacts:
            n_keep = round_half_up(unblemished_ratio * m)
            keep_rng = np_rng(seed, "keep", subj.subject_id, spec.artifact_id)
            kept = set(keep_rng.choice(m, size=n_keep, replace=False).tolist())
            images = []
            for idx, img in enumerate(subj.images):
                if idx in kept:
                    images.append(img.copy())
                else:
                    images.append(
                        apply_artifact(
                            img, spec, derive_seed(seed, subj.subject_id, spec.artifact_id, idx)
                        )
                    )
            blemished[(subj.subject_id, spec.artifact_id)] = SubjectSet(
                subject_id=subj.subject_id,
                images=images,
                provenance={
                    **subj.provenance,
                    "artifact_id": spec.artifact_id,
                    "kept_clean": sorted(kept),
                },
            )

    ds = PairedDataset(
        subjects=clean,
        artifacts=list(artifacts),
        blemished=blemished,
        unblemished_ratio=unblemished_ratio,
        seed=seed,
    )
    ds.validate()
    return ds


def split_artifacts_id_ood(
    train_artifacts: list[ArtifactSpec], test_artifacts: list[ArtifactSpec]
) -> tuple[list[ArtifactSpec], list[ArtifactSpec]]:
    """A test artifact is in-distribution iff its full parameter record equals
    some training artifact's record."""
    id_set, ood_set = [], []
    for t in test_artifacts:
        if any(same_record(t, tr) for tr in train_artifacts):
            id_set.append(t)
        else:
            ood_set.append(t)
    return id_set, ood_set


def save_dataset(ds: PairedDataset, root: str | Path) -> None:
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    for subj in ds.subjects:
        for i, img in enumerate(subj.images):
            save_png(img, root / subj.subject_id / "clean" / f"{i:03d}.png")
    for (sid, aid), subset in sorted(ds.blemished.items()):
        for i, img in enumerate(subset.images):
            save_png(img, root / sid / aid / f"{i:03d}.png")
    manifest = {
        "schema_version": 1,
        "n_subjects": len(ds.subjects),
        "n_artifacts": len(ds.artifacts),
        "unblemished_ratio": ds.unblemished_ratio,
        "seed": ds.seed,
        "subjects": [
            {
                "subject_id": s.subject_id,
                "n_images": len(s.images),
                "provenance": {k: v for k, v in s.provenance.items()},
            }
            for s in ds.subjects
        ],
        "artifacts": [a.to_json_dict() for a in ds.artifacts],
        "kept_clean": {
            f"{sid}/{aid}": subset.provenance.get("kept_clean", [])
            for (sid, aid), subset in sorted(ds.blemished.items())
        },
    }
    (root / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True))


def load_dataset(root: str | Path) -> PairedDataset:
    root = Path(root)
    manifest = json.loads((root / "manifest.json").read_text())
    artifacts = [ArtifactSpec.from_json_dict(a) for a in manifest["artifacts"]]
    subjects = []
    blemished: dict[tuple[str, str], SubjectSet] = {}
    for entry in manifest["subjects"]:
        sid = entry["subject_id"]
        n = entry["n_images"]
        clean_imgs = [load_png(root / sid / "clean" / f"{i:03d}.png") for i in range(n)]
        subjects.append(
            SubjectSet(subject_id=sid, images=clean_imgs, provenance=entry["provenance"])
        )
        for spec in artifacts:
            imgs = [load_png(root / sid / spec.artifact_id / f"{i:03d}.png") for i in range(n)]
            blemished[(sid, spec.artifact_id)] = SubjectSet(
                subject_id=sid,
                images=imgs,
                provenance={
                    **entry["provenance"],
                    "artifact_id": spec.artifact_id,
                    "kept_clean": manifest["kept_clean"][f"{sid}/{spec.artifact_id}"],
                },
            )
    ds = PairedDataset(
        subjects=subjects,
        artifacts=artifacts,
        blemished=blemished,
        unblemished_ratio=manifest["unblemished_ratio"],
        seed=manifest["seed"],
    )
    ds.validate()
    return ds
