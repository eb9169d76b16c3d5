"""Exact-arithmetic toolkit for root subalgebras, shadow decompositions,
finite-type criteria and k-type multiplicity series."""

from . import exact, fk, mathieu, principal, rootsys, shadow  # noqa: F401

__version__ = "0.1.0"
