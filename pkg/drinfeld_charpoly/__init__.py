"""Characteristic polynomials of Drinfeld module endomorphisms over finite fields."""

__version__ = "1.0.0"
