"""Exact-arithmetic generalized Schur algebras over based quasi-hereditary superalgebras."""

from schurify.base_algebra import make_algebra, verify_heredity
from schurify.schur import SchurAlgebra, build_schur

__version__ = "0.1.0"

__all__ = [
    "SchurAlgebra",
    "build_schur",
    "make_algebra",
    "verify_heredity",
    "__version__",
]
