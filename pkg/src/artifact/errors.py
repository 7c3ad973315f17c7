"""Exception types shared across the package."""


class ArtifactError(Exception):
    """Base class for all package errors."""


class ValidationError(ArtifactError, ValueError):
    """A spec, parameter record, or tensor violates its declared invariants."""


class DimensionError(ArtifactError, ValueError):
    """Array shapes are inconsistent (noise map vs image, latent vs model)."""


class UnknownTokenError(ArtifactError, ValueError):
    """A prompt token resolves to neither a base-vocabulary row nor a slot."""


class EmbedderMismatchError(ArtifactError, ValueError):
    """Feature vectors from different embedders (or widths) were combined."""


class UndefinedRatioError(ArtifactError, ZeroDivisionError):
    """Ratio metric denominator is zero."""


class ConfigError(ArtifactError, ValueError):
    """A config file fails schema validation.  CLI exit code 2."""


class StageError(ArtifactError, RuntimeError):
    """A pipeline stage failed at runtime (NaN loss, missing input, ...).

    CLI exit code 1.
    """
