"""Decide ``A x <= b``: a point, or ``lam >= 0`` with ``lam^T A = 0`` and ``lam^T b < 0``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact_linalg import DimensionError, RatMat
from .fourier_motzkin import back_substitute, project_all
from .model import DualCertificate, Feasible, Infeasible, PrimalWitness, RelationKind, Verdict


def solve_basic(A: RatMat, b: Sequence[Fraction]) -> Verdict:
    """Fourier-Motzkin feasibility decision for a pure ``<=`` system.

    The infeasible branch returns the first row of the cumulative multiplier
    matrix whose projected right-hand side is negative, as a certificate on a
    single ``le`` block.
    """
    b = tuple(b)
    if A.rows != len(b):
        raise DimensionError(f"A has {A.rows} rows, b has {len(b)}")
    trace = project_all(A, b)
    i = trace.first_negative()
    if i is None:
        return Feasible(PrimalWitness(back_substitute(trace, A, b)))
    return Infeasible(DualCertificate({RelationKind.LE: trace.cumulative.row(i)}))


def multipliers(verdict: Verdict) -> tuple:
    """The raw ``lam`` vector of an infeasible basic verdict."""
    return verdict.certificate.lambdas[RelationKind.LE]
