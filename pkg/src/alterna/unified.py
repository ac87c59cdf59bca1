"""Mixed systems via homogenisation to a single ``<=`` system.

Strict relations are made weak by scaling: with ``u = t x`` and ``t >= 1`` every
strict gap can be normalised to at least 1. The reduced system over ``(u, t)``
is solved by :func:`alterna.basic.solve_basic`, and its answer is mapped back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .basic import multipliers, solve_basic
from .exact_linalg import DimensionError, RatMat, RatVec, dot, vec_mat, zeros
from .model import (
    DualCertificate,
    Feasible,
    Infeasible,
    MixedSystem,
    PrimalWitness,
    RelationKind as K,
    Verdict,
)

ONE, ZERO = Fraction(1), Fraction(0)

# row labels in the reduced system
T_BOUND = "t"
EQ_PLUS = "eq+"
EQ_MINUS = "eq-"
LE = "le"
NONNEG = "nonneg"
LT = "lt"
LT_SUM = "lt-sum"
LL = "ll"


class InconsistentResult(AssertionError):
    """The reduction produced something that contradicts its own derivation."""


@dataclass(frozen=True)
class ReducedSystem:
    """``Atil [u; t] <= btil`` with a label and source row for every row."""

    Atil: RatMat
    btil: RatVec
    row_map: tuple  # tuple[(label, source_row), ...]

    def rows_labelled(self, label: str) -> list:
        return [i for i, (lab, _) in enumerate(self.row_map) if lab == label]


def build_reduction(s: MixedSystem) -> ReducedSystem:
    n = s.n
    rows, rhs, labels = [], [], []

    def add(label, src, a, t_coef, b):
        rows.append(tuple(a) + (t_coef,))
        rhs.append(Fraction(b))
        labels.append((label, src))

    add(T_BOUND, 0, zeros(n), -ONE, -1)
    if (blk := s.block(K.EQ)) is not None:
        for i, (a, b) in enumerate(zip(blk.A, blk.b)):
            add(EQ_PLUS, i, a, -b, 0)
        for i, (a, b) in enumerate(zip(blk.A, blk.b)):
            add(EQ_MINUS, i, (-v for v in a), b, 0)
    if (blk := s.block(K.LE)) is not None:
        for i, (a, b) in enumerate(zip(blk.A, blk.b)):
            add(LE, i, a, -b, 0)
    if s.nonneg:
        for j in range(n):
            a = [ZERO] * n
            a[j] = -ONE
            add(NONNEG, j, a, ZERO, 0)
    if (blk := s.block(K.LT)) is not None:
        for i, (a, b) in enumerate(zip(blk.A, blk.b)):
            add(LT, i, a, -b, 0)
        add(LT_SUM, 0, vec_mat((ONE,) * blk.m, blk.A), -sum(blk.b, ZERO), -1)
    if (blk := s.block(K.LL)) is not None:
        for i, (a, b) in enumerate(zip(blk.A, blk.b)):
            add(LL, i, a, -b, -1)
    return ReducedSystem(RatMat(len(rows), n + 1, tuple(rows)), tuple(rhs), tuple(labels))


def fold_certificate(s: MixedSystem, red: ReducedSystem, lam: RatVec) -> DualCertificate:
    """Map reduced-system multipliers back onto the blocks of ``s``.

    Equality multipliers are the difference of the ``+`` and ``-`` copies;
    the ``lt-sum`` multiplier is spread over every ``lt`` row. The ``t`` and
    ``nonneg`` multipliers have no counterpart and are dropped.
    """
    out = {}
    for blk in s.blocks:
        out[blk.kind] = [ZERO] * blk.m
    for (label, src), v in zip(red.row_map, lam):
        if label == EQ_PLUS:
            out[K.EQ][src] += v
        elif label == EQ_MINUS:
            out[K.EQ][src] -= v
        elif label == LE:
            out[K.LE][src] += v
        elif label == LT:
            out[K.LT][src] += v
        elif label == LT_SUM:
            out[K.LT] = [w + v for w in out[K.LT]]
        elif label == LL:
            out[K.LL][src] += v
    return DualCertificate(out)


def contradiction_value(s: MixedSystem, cert: DualCertificate) -> tuple[RatVec, Fraction]:
    """Return ``(sum_i lam_i^T A_i, sum_i lam_i^T b_i)``."""
    lhs = zeros(s.n)
    rhs = ZERO
    if set(cert.lambdas) != {blk.kind for blk in s.blocks}:
        raise DimensionError("certificate blocks do not match the system")
    for blk in s.blocks:
        lam = cert.lambdas[blk.kind]
        if len(lam) != blk.m:
            raise DimensionError(f"{blk.kind.value} multiplier has dim {len(lam)}, expected {blk.m}")
        lhs = tuple(p + q for p, q in zip(lhs, vec_mat(lam, blk.A)))
        rhs += dot(lam, blk.b)
    return lhs, rhs


def _strict(s: MixedSystem, cert: DualCertificate, rhs: Fraction) -> bool:
    if rhs < 0:
        return True
    lt = cert.get(K.LT)
    if lt is not None and all(v > 0 for v in lt):
        return True
    ll = cert.get(K.LL)
    return ll is not None and any(v > 0 for v in ll)


def solve_reduced(s: MixedSystem) -> tuple[ReducedSystem, Verdict]:
    red = build_reduction(s)
    return red, solve_basic(red.Atil, red.btil)


def solve_unified(s: MixedSystem) -> Verdict:
    """Decide a mixed system, returning a witness or a dual certificate."""
    red, basic = solve_reduced(s)
    if isinstance(basic, Feasible):
        *u, t = basic.witness.x
        if t < 1:
            raise InconsistentResult(f"reduced solution has t = {t} < 1")
        return Feasible(PrimalWitness(tuple(v / t for v in u)))

    cert = fold_certificate(s, red, multipliers(basic))
    lhs, rhs = contradiction_value(s, cert)
    if s.nonneg:
        ok_l = all(v >= 0 for v in lhs)
    else:
        ok_l = all(v == 0 for v in lhs)
    if not (ok_l and rhs <= 0 and _strict(s, cert, rhs)):
        raise InconsistentResult("folded certificate does not refute the system")
    return Infeasible(cert)
