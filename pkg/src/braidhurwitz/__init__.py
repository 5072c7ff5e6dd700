"""Hurwitz equivalence of braid factorizations, with replayable certificates."""

__version__ = "0.1.0"
