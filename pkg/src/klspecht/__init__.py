"""Kazhdan-Lusztig bases of parabolic Hecke modules in types A and B, Specht
vectors, and a certified change of basis between them."""

__version__ = "0.1.0"
