"""Symmetric 2-designs with prime lambda: constructions, permutation-group
algorithms, and arithmetic elimination scans."""

__version__ = "0.1.0"
