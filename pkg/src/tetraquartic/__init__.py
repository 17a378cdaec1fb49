"""Exact verification toolkit for quartic surfaces containing the edges of a tetrahedron."""

__version__ = "0.1.0"
