"""Exact toolkit for braid-group eigenvalue spectra and density verdicts."""

__version__ = "0.1.0"
