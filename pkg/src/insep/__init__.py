"""Exact invariants of p-Fermat hypersurfaces over characteristic-p function fields.

Subpackages and modules:
    fieldarith  exact arithmetic kernel (polynomials, fractions, extensions, linear algebra)
    frobenius   Frobenius coordinates, p-th powers, p-degree of generated subfields
    artin       finite local algebras: embedding dimension, tensor squares, root adjunction
    fermat      hypersurface classification by the invariant d
    groebner    Buchberger oracle and ideal dimensions over K[U_0..U_n]
    curves      d = 1 plane curves: normalization, conductor algebras, glueing cohomology
    cli         job runner and verification catalog
"""

__version__ = "0.1.0"
