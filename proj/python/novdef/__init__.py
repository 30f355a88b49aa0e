"""Exact Novikov deformations of commutative associative algebras."""

from ._core import (
    NovdefError,
    check_identity,
    family2d_equiv,
    normalize_family,
    operad_dims,
    run,
    series_inverse,
)

__all__ = [
    "NovdefError",
    "check_identity",
    "family2d_equiv",
    "normalize_family",
    "operad_dims",
    "run",
    "series_inverse",
]
