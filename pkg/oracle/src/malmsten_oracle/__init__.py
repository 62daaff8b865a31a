"""Arbitrary-precision reference generator for the malmsten golden fixtures."""

__version__ = "0.1.0"
