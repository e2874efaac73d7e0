"""
Exact computations with dendriform algebras carrying involutions and
oriented group actions: axiom checkers, cochain complexes and their
cohomology, extensions, deformations, free algebras and homotopy
(Dend-infinity / A-infinity) identities.
"""

__version__ = "0.1.0"

from .errors import InputError  # noqa: F401
