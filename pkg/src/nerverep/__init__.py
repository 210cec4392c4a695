"""Representability of simplicial complexes as nerves of convex sets."""

from .complex import SimplicialComplex, build_complex, dual
from .fixtures import load as load_fixture

__version__ = "0.1.0"

__all__ = ["SimplicialComplex", "build_complex", "dual", "load_fixture", "__version__"]
