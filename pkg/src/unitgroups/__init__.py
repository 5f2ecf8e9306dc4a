"""Finite rings, their unit groups, and recognition of dihedral unit groups."""

__version__ = "0.1.0"
