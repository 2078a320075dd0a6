"""Closed neighborhood complexes of graphs: constructions, exact homology and fundamental groups."""

__version__ = "0.1.0"
