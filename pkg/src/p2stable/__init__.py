"""Exact invariants of stable-pair degenerations of the projective plane."""
__version__ = "0.1.0"
