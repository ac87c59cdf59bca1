"""Fourier-Motzkin elimination with multiplier tracking.

Every inequality produced here is a nonnegative combination of the input rows,
and the combining matrix is carried along so that an infeasible projection
yields a Farkas multiplier directly. Back-substitution walks the recorded
levels in reverse to rebuild a feasible point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_linalg import DimensionError, RatMat, RatVec, dot, mat_mul, mat_vec, normalize_row

_ZERO = Fraction(0)


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class EliminationStep:
    """One application of single-variable elimination to ``A x <= b``.

    ``E`` has a unit row for each index in ``I0`` followed by one row
    ``e_k / a_k - e_l / a_l`` for each ``(k, l)`` in ``Iplus x Iminus``.
    ``A``/``b`` are the input system of this step; ``A_out``/``b_out`` the result.
    """

    col: int
    I0: tuple
    Iplus: tuple
    Iminus: tuple
    E: RatMat
    A: RatMat
    b: RatVec
    A_out: RatMat
    b_out: RatVec


@dataclass(frozen=True)
class ProjectionTrace:
    """Result of eliminating every variable.

    ``initial`` is the row cleanup applied before the first step. Each entry
    of ``steps`` records the cleaned-up elimination, i.e. its ``E`` is the
    Lemma-style matrix with redundant rows removed and survivors rescaled, so
    ``cumulative == steps[-1].E @ ... @ steps[0].E @ initial`` and
    ``cumulative @ A == 0`` once every column is gone.
    """

    initial: RatMat
    steps: tuple
    cumulative: RatMat
    final_b: RatVec

    @property
    def feasible(self) -> bool:
        return all(v >= 0 for v in self.final_b)

    def first_negative(self) -> int | None:
        return next((i for i, v in enumerate(self.final_b) if v < 0), None)


def partition(A: RatMat, col: int) -> tuple[tuple, tuple, tuple]:
    I0, Ip, Im = [], [], []
    for i, r in enumerate(A.data):
        a = r[col]
        (I0 if a == 0 else Ip if a > 0 else Im).append(i)
    return tuple(I0), tuple(Ip), tuple(Im)


def eliminate_variable(A: RatMat, b: Sequence[Fraction], col: int) -> EliminationStep:
    """Eliminate column ``col`` from ``A x <= b`` (single Fourier-Motzkin step)."""
    b = tuple(b)
    if A.rows != len(b):
        raise DimensionError(f"A has {A.rows} rows, b has {len(b)}")
    if not 0 <= col < A.cols:
        raise IndexError(f"column {col} out of range for {A.cols} columns")
    I0, Ip, Im = partition(A, col)
    m = A.rows
    rows = []
    for i in I0:
        e = [_ZERO] * m
        e[i] = Fraction(1)
        rows.append(tuple(e))
    for k in Ip:
        for l in Im:
            e = [_ZERO] * m
            e[k] = 1 / A[k, col]
            e[l] = -1 / A[l, col]
            rows.append(tuple(e))
    E = RatMat(len(rows), m, tuple(rows))
    return EliminationStep(col, I0, Ip, Im, E, A, b, mat_mul(E, A), mat_vec(E, b))


class _Survivors:
    """Streaming row cleanup: leading coefficient +-1, no trivial rows, no duplicates.

    Candidates are ``(coeffs, rhs, weights)`` where ``weights`` maps input row
    indices to positive multipliers. A ``0 <= rhs`` candidate with ``rhs < 0``
    refutes the system and becomes the only survivor.
    """

    def __init__(self):
        self.best: dict = {}
        self.refuted = None

    def offer(self, a, rhs, weights) -> bool:
        a, rhs, s = normalize_row(a, rhs)
        if not any(a):
            if rhs < 0:
                self.refuted = (a, rhs, tuple((i, w * s) for i, w in weights))
                return True
            return False
        cur = self.best.get(a)
        if cur is None or rhs < cur[0]:
            self.best[a] = (rhs, tuple((i, w * s) for i, w in weights))
        return False

    def matrix(self, m: int, n: int):
        if self.refuted is not None:
            a, rhs, w = self.refuted
            items = [(a, rhs, w)]
        else:
            items = [(a, rhs, w) for a, (rhs, w) in self.best.items()]
        rows = []
        for _, _, weights in items:
            e = [_ZERO] * m
            for i, w in weights:
                e[i] += w
            rows.append(tuple(e))
        E = RatMat(len(rows), m, tuple(rows))
        A = RatMat(len(items), n, tuple(a for a, _, _ in items))
        return E, A, tuple(rhs for _, rhs, _ in items)


def _hygiene(A: RatMat, b: RatVec) -> RatMat:
    """Cleanup of an existing system, as a nonnegative row selection/scaling."""
    keep = _Survivors()
    for i in range(A.rows):
        if keep.offer(A.row(i), b[i], ((i, Fraction(1)),)):
            break
    return keep.matrix(A.rows, A.cols)[0]


def _clean_step(A: RatMat, b: RatVec, col: int) -> EliminationStep:
    """Elimination of ``col`` with cleanup folded in, never materialising the raw ``E``."""
    I0, Ip, Im = partition(A, col)
    keep = _Survivors()
    one = Fraction(1)
    done = False
    for i in I0:
        if keep.offer(A.row(i), b[i], ((i, one),)):
            done = True
            break
    if not done:
        for k in Ip:
            rk, wk = A.row(k), 1 / A[k, col]
            for l in Im:
                rl, wl = A.row(l), -1 / A[l, col]
                a = tuple(wk * p + wl * q for p, q in zip(rk, rl))
                if keep.offer(a, wk * b[k] + wl * b[l], ((k, wk), (l, wl))):
                    done = True
                    break
            if done:
                break
    E, A_out, b_out = keep.matrix(A.rows, A.cols)
    return EliminationStep(col, I0, Ip, Im, E, A, b, A_out, b_out)


def _pick_column(A: RatMat, remaining: list) -> int:
    # fewest generated pairs; ties go to the lowest index
    def cost(j):
        _, ip, im = partition(A, j)
        return len(ip) * len(im)

    return min(remaining, key=lambda j: (cost(j), j))


def _compose(E: RatMat, cumulative: RatMat) -> RatMat:
    rows = []
    for e in E.data:
        out = [_ZERO] * cumulative.cols
        for i, w in enumerate(e):
            if w:
                for j, v in enumerate(cumulative.data[i]):
                    if v:
                        out[j] += w * v
        rows.append(tuple(out))
    return RatMat(E.rows, cumulative.cols, tuple(rows))


def project_all(A: RatMat, b: Sequence[Fraction]) -> ProjectionTrace:
    """Eliminate all variables from ``A x <= b``.

    Columns go in greedy order (fewest new rows first). Between steps rows
    are scaled to a leading +-1, rows reading ``0 <= nonnegative`` are
    dropped, and duplicates keep only their smallest right side.
    """
    b = tuple(b)
    if A.rows != len(b):
        raise DimensionError(f"A has {A.rows} rows, b has {len(b)}")
    initial = _hygiene(A, b)
    cumulative = initial
    curA, curb = mat_mul(initial, A), mat_vec(initial, b)
    steps = []
    remaining = list(range(A.cols))
    while remaining and curA.rows:
        col = _pick_column(curA, remaining)
        remaining.remove(col)
        step = _clean_step(curA, curb, col)
        steps.append(step)
        cumulative = _compose(step.E, cumulative)
        curA, curb = step.A_out, step.b_out
    return ProjectionTrace(initial, tuple(steps), cumulative, curb)


def back_substitute(trace: ProjectionTrace, A: RatMat, b: Sequence[Fraction]) -> RatVec:
    """Rebuild a point with ``A x <= b`` from a feasible projection.

    Each eliminated variable gets the midpoint of its bounds, or the single
    finite bound, or 0 when unconstrained. Variables never eliminated are 0.
    """
    b = tuple(b)
    if not trace.feasible:
        raise PreconditionError("projected system is infeasible; nothing to back-substitute")
    x = [_ZERO] * A.cols
    for step in reversed(trace.steps):
        c = step.col
        lower = upper = None
        for i in step.Iplus + step.Iminus:
            r = step.A.row(i)
            a = r[c]
            rest = dot(r, x) - a * x[c]
            bound = (step.b[i] - rest) / a
            if a > 0:
                upper = bound if upper is None else min(upper, bound)
            else:
                lower = bound if lower is None else max(lower, bound)
        if lower is not None and upper is not None:
            x[c] = (lower + upper) / 2
        elif lower is not None:
            x[c] = lower
        elif upper is not None:
            x[c] = upper
        else:
            x[c] = _ZERO
    x = tuple(x)
    if any(v > bb for v, bb in zip(mat_vec(A, x), b)):
        raise AssertionError("back-substitution produced a point outside A x <= b")
    return x
