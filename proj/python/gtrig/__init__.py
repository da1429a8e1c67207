"""Generalized trigonometric functions of a polynomial and closed-form sums
of n^k/P(n) over the integers."""

from fractions import Fraction

from ._core import (
    CyclotomicSystem,
    GenTrigSystem,
    IdentityCertificate,
    InputError,
    NumericalError,
    Polynomial,
    addition_rule,
    associated_matrix,
    brute_force_sum,
    det_M,
    evaluate_sums,
    find_roots,
    identity_certificate,
    matrix_A,
    run_criterion,
)
from ._core import factorial_identity as _factorial_identity


def factorial_identity(n):
    """Exact sums of 1/(k1! k2! k3!) over triples with k1 + k2 + k3 = n."""
    raw = _factorial_identity(n)
    out = {key: Fraction(value) for key, value in raw.items() if key != "holds"}
    out["holds"] = raw["holds"]
    return out


__all__ = [
    "CyclotomicSystem",
    "GenTrigSystem",
    "IdentityCertificate",
    "InputError",
    "NumericalError",
    "Polynomial",
    "addition_rule",
    "associated_matrix",
    "brute_force_sum",
    "det_M",
    "evaluate_sums",
    "factorial_identity",
    "find_roots",
    "identity_certificate",
    "matrix_A",
    "run_criterion",
]
