"""Densities of group languages in shift spaces."""

__version__ = "1.0.0"
