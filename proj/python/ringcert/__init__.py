"""Exact certificates for irreducibility and maximal orders."""

from fractions import Fraction

from ringcert import _core
from ringcert._core import (
    SCHEMA_VERSION,
    GenerationError,
    bundle_discriminant,
    disc_poly,
    generate_bundle,
    generate_irreducibility,
    resultant,
    verdict_json,
    verify_bytes,
)

__all__ = [
    "SCHEMA_VERSION",
    "GenerationError",
    "bundle_discriminant",
    "cauchy_bound_scaled",
    "disc_poly",
    "generate_bundle",
    "generate_irreducibility",
    "resultant",
    "verdict_json",
    "verify_bytes",
    "verify_file",
]


def cauchy_bound_scaled(coeffs, r):
    """Root bound r * (1 + max |a_i| / (|a_n| r^(n-i))) as an exact Fraction."""
    r = Fraction(r)
    num, den = _core.cauchy_bound_scaled(list(coeffs), r.numerator, r.denominator)
    return Fraction(num, den)


def verify_file(path, threads=1):
    with open(path, "rb") as fh:
        return verify_bytes(fh.read(), threads)
