"""Maximum-distance-separable symbol-pair codes."""

__version__ = "0.1.0"
