"""Exact proof checking for mixed systems.

This module deliberately reuses nothing from the solvers except the rational
primitives, so a solver bug cannot certify itself. There is no tolerance
anywhere: every comparison is between Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import DimensionError, mat_vec, vec_cmp
from .model import DualCertificate, MixedSystem, PrimalWitness, RelationKind


@dataclass(frozen=True)
class Check:
    """Outcome of a proof check; truthy iff the proof is valid.

    ``condition`` is ``"block"`` or ``"N"`` for primal failures and one of
    ``"M" "L" "R" "S"`` for dual failures. ``index`` is the relation index
    (1..4) for block and M failures, the offending column for L and N, and 0
    for R and S. ``row`` pinpoints the row when a single one is to blame.
    """

    ok: bool
    condition: str | None = None
    index: int | None = None
    row: int | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        if self.ok:
            return {"ok": True, "failed": None}
        failed = {"condition": self.condition, "index": self.index}
        if self.row is not None:
            failed["row"] = self.row
        return {"ok": False, "failed": failed, "detail": self.detail}


PASS = Check(True)


def verify_primal(s: MixedSystem, w: PrimalWitness) -> Check:
    x = tuple(w.x)
    if len(x) != s.n:
        raise DimensionError(f"witness has dim {len(x)}, system has {s.n} unknowns")
    for blk in s.blocks:
        k = blk.kind
        ax = mat_vec(blk.A, x)
        if vec_cmp(ax, blk.b, k):
            continue
        # locate a single culprit row where possible
        for i, (p, q) in enumerate(zip(ax, blk.b)):
            bad = (p != q) if k is RelationKind.EQ else (p >= q) if k is RelationKind.LL else (p > q)
            if bad:
                return Check(False, "block", k.index, i, f"{k.value} row {i}: {p} vs {q}")
        return Check(False, "block", k.index, None, f"{k.value} block holds with equality everywhere")
    if s.nonneg:
        for j, v in enumerate(x):
            if v < 0:
                return Check(False, "N", j, None, f"x[{j}] = {v} < 0")
    return PASS


def verify_dual(s: MixedSystem, c: DualCertificate) -> Check:
    present = {blk.kind for blk in s.blocks}
    extra = set(c.lambdas) - present
    if extra:
        raise DimensionError(f"multipliers given for absent blocks: {sorted(k.value for k in extra)}")
    lam = {}
    for blk in s.blocks:
        v = c.lambdas.get(blk.kind)
        if v is None:
            raise DimensionError(f"missing multiplier for {blk.kind.value} block")
        if len(v) != blk.m:
            raise DimensionError(f"{blk.kind.value} multiplier has dim {len(v)}, expected {blk.m}")
        lam[blk.kind] = tuple(v)

    # (M) sign restrictions
    for blk in s.blocks:
        if blk.kind is RelationKind.EQ:
            continue
        for i, v in enumerate(lam[blk.kind]):
            if v < 0:
                return Check(False, "M", blk.kind.index, i, f"lambda_{blk.kind.index}[{i}] = {v} < 0")

    # (L) combined coefficients vanish (or are >= 0 under x >= 0)
    for j in range(s.n):
        total = Fraction(0)
        for blk in s.blocks:
            for coef, row in zip(lam[blk.kind], blk.A.data):
                total += coef * row[j]
        if (total < 0) if s.nonneg else (total != 0):
            return Check(False, "L", j, None, f"combined coefficient on x[{j}] is {total}")

    # (R)
    rhs = Fraction(0)
    for blk in s.blocks:
        for coef, bi in zip(lam[blk.kind], blk.b):
            rhs += coef * bi
    if rhs > 0:
        return Check(False, "R", 0, None, f"combined right side {rhs} > 0")

    # (S) disjuncts exist only for present strict blocks
    strict = rhs < 0
    if not strict and RelationKind.LT in lam:
        strict = all(v > 0 for v in lam[RelationKind.LT])
    if not strict and RelationKind.LL in lam:
        strict = any(v != 0 for v in lam[RelationKind.LL])
    if not strict:
        return Check(False, "S", 0, None, "right side is 0 and no strict multiplier is active")
    return PASS


def verify(s: MixedSystem, proof) -> Check:
    if isinstance(proof, PrimalWitness):
        return verify_primal(s, proof)
    if isinstance(proof, DualCertificate):
        return verify_dual(s, proof)
    raise TypeError(f"not a proof object: {type(proof).__name__}")


def verify_verdict(s: MixedSystem, verdict) -> Check:
    proof = getattr(verdict, "witness", None) or getattr(verdict, "certificate", None)
    return verify(s, proof)


def mutual_exclusion_check(s: MixedSystem, w: PrimalWitness, c: DualCertificate) -> bool:
    """True unless the witness and the certificate both check out."""
    return not (verify_primal(s, w) and verify_dual(s, c))
