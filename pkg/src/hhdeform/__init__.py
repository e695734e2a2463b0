"""Exact computations with Hochschild cochains, A-infinity deformations and twisted Hodge numbers."""

__version__ = "0.1.0"
