"""islandde - self-adaptive, multi-population Differential Evolution."""

__version__ = "0.1.0"
