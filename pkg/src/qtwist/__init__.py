"""Exact computer algebra for multiparameter quantum groups and their cocycle twists."""

__version__ = "0.1.0"
