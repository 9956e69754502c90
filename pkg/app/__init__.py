"""Exact calculus of free n-tuples: non-crossing partitions, the boxed-star
convolution, R-transforms and the products of free families."""

__version__ = "0.1.0"
