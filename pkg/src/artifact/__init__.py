"""Subject-driven generation from blemished image sets, at desk scale.

The package covers the full loop: synthesize parametric artifacts onto clean
images, invert blemished subsets into textual embeddings against a toy
text-conditioned diffusion model, rectify the model (cross-attention key/value
weights plus one shared artifact-free embedding) so blemished embeddings
reconstruct clean images, and score the result with ratio metrics.
"""

__version__ = "0.1.0"
