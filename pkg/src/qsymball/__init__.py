"""Quantum symmetric 2x2 matrix ball: algebras, representations, and
Shilov-boundary verification."""

__version__ = "0.1.0"
