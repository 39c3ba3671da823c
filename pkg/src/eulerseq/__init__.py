"""Homogeneous derivations of graded algebras and the generalized Euler
sequence on the projective line, computed exactly."""

__version__ = "0.1.0"
