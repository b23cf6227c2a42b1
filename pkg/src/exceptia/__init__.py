"""Exact arithmetic for hypercomplex algebras, lattices and modular forms."""

__version__ = "0.1.0"
