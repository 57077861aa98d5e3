"""Ternary products on projective spaces, the Grassmannian map Gamma and
checkers for torsor and Moufang-type identities, all in exact arithmetic."""

__version__ = "0.1.0"
