"""Exact computations with finite racks, their extensions, cohomology and Nichols algebras."""

__version__ = "0.1.0"
