"""Exact q-Narayana, q-Fibonacci and q-Lucas computations with identity checking."""

from .exactalg import ONE, ZERO, Poly, RatFunc, q, t, x

__version__ = "0.1.0"

__all__ = ["Poly", "RatFunc", "q", "t", "x", "ONE", "ZERO", "__version__"]
