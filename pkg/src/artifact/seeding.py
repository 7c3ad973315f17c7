"""Deterministic seed derivation.

Every stochastic stage derives its RNG stream from a root seed plus the
identifying tuple of the work item (subject id, artifact id, image index, ...)
so that rebuilding any artifact is byte-identical regardless of evaluation
order or parallelism.
"""

from __future__ import annotations

import hashlib

import numpy as np
import torch

_MASK63 = (1 << 63) - 1


def derive_seed(*parts: object) -> int:
    """Collapse a tuple of identifying values into a stable 63-bit seed."""
    key = "\x1f".join(repr(p) for p in parts)
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") & _MASK63


def np_rng(*parts: object) -> np.random.Generator:
    return np.random.default_rng(derive_seed(*parts))


def torch_generator(*parts: object) -> torch.Generator:
    gen = torch.Generator(device="cpu")
    gen.manual_seed(derive_seed(*parts))
    return gen
