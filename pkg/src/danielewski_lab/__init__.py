"""Exact computations with Danielewski surfaces and their automorphisms."""

__version__ = "0.1.0"
