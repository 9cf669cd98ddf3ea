"""Exact Hopf-algebra computations in braided categories of Z/N-graded spaces."""

__version__ = "0.1.0"
