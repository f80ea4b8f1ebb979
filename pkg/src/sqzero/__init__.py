"""Equivariant classes of square-zero upper-triangular Borel orbits."""

__version__ = "0.1.0"
