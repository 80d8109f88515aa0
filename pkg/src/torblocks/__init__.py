"""Exact block classification for positive-level integrable modules of
toroidal Lie algebras."""

__version__ = "0.1.0"
