"""Analysis of polynomials with zeros symmetric to the real line or unit circle."""

from .polycore import Polynomial

__all__ = ["Polynomial"]
