"""Cubo-cubic Cremona transformations and determinantal quartic surfaces."""

import json

from ._cubocubic import (
    CubocubicError,
    Tensor,
    cubo_cubic_maps,
    curve_degree_genus,
    determinants,
    generate,
    hilbert,
    hilbert_burch_dim,
    intersection_matrix,
    inverse_degrees,
    scan_json,
    verify_json,
)

__all__ = [
    "CubocubicError",
    "Tensor",
    "cubo_cubic_maps",
    "curve_degree_genus",
    "determinants",
    "generate",
    "hilbert",
    "hilbert_burch_dim",
    "intersection_matrix",
    "inverse_degrees",
    "scan",
    "verify",
]


def verify(tensor, primes=(7, 11, 13), max_degree=8, threads=None):
    """Run every check and return the report as a dict."""
    return json.loads(verify_json(tensor, list(primes), max_degree, threads))


def scan(tensor, prime, target="curve", threads=None):
    """List the F_p-points of the curve, S1 or S2."""
    return json.loads(scan_json(tensor, prime, target, threads))
