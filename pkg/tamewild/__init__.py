"""Exact tame/wild decisions for automorphisms and coordinates of free algebras."""

__version__ = "0.1.0"
