"""Exact engine for vector-valued nonsymmetric Macdonald polynomials.

Subpackages build on each other in this order: ``qsfield`` (the coefficient
field Q(q,s)), ``tableaux`` (partitions, reverse standard tableaux,
fillings), ``heckemod`` (the irreducible Hecke module on tableaux),
``vvpoly`` (vector-valued polynomials and the operator algebra),
``ybgraph`` (the Yang-Baxter graph), ``macdonald`` (the polynomials and
their symmetrizations), ``bilinear`` (norms and hook-length formulas),
``cli`` (the command-line front end).
"""

__version__ = "0.1.0"
