"""Exact-arithmetic toolkit for Laurent-monomial subalgebras.

Laurent polynomials over Q or F_p, integer lattice algebra (Smith form,
cosets), Hilbert bases of pointed cones, binomial instance families with
their ratio/determinant conditions, a summing derivation and its kernel,
and bounded-degree intersection algebras, plus a batch verification CLI.
"""

__version__ = "0.1.0"
