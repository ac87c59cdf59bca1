"""Primal systems, proof objects and their JSON form."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .exact_linalg import DimensionError, RatMat, RatVec, format_rat, lcm_denominator, rat, vec


class RelationKind(enum.Enum):
    """The four relation kinds, in their fixed order ``=, <=, <, <<``."""

    EQ = "eq"
    LE = "le"
    LT = "lt"  # weak dominance: <= with at least one strict component
    LL = "ll"  # strict dominance: every component strict

    @property
    def index(self) -> int:
        return _INDEX[self]

    @property
    def symbol(self) -> str:
        return {"eq": "=", "le": "<=", "lt": "<", "ll": "<<"}[self.value]

    @property
    def sign_constrained(self) -> bool:
        return self is not RelationKind.EQ

    def __lt__(self, other):
        return self.index < other.index


KINDS = tuple(RelationKind)
_INDEX = {k: i + 1 for i, k in enumerate(KINDS)}


class InputError(ValueError):
    """Malformed system or proof object."""


@dataclass(frozen=True)
class Block:
    kind: RelationKind
    A: RatMat
    b: RatVec

    def __post_init__(self):
        if self.A.rows != len(self.b):
            raise DimensionError(f"{self.kind.value} block: A has {self.A.rows} rows, b has {len(self.b)}")
        if self.A.rows < 1:
            raise DimensionError(f"{self.kind.value} block is empty; omit it instead")

    @property
    def m(self) -> int:
        return self.A.rows


@dataclass(frozen=True)
class MixedSystem:
    """``A1 x = b1, A2 x <= b2, A3 x < b3, A4 x << b4`` and optionally ``x >= 0``.

    Each relation kind has at most one block; absent kinds are simply missing.
    """

    n: int
    blocks: tuple = ()
    nonneg: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise DimensionError("negative number of unknowns")
        ordered = tuple(sorted(self.blocks, key=lambda blk: blk.kind.index))
        kinds = [blk.kind for blk in ordered]
        if len(set(kinds)) != len(kinds):
            raise InputError("at most one block per relation kind")
        for blk in ordered:
            if blk.A.cols != self.n:
                raise DimensionError(f"{blk.kind.value} block has {blk.A.cols} columns, expected {self.n}")
        object.__setattr__(self, "blocks", ordered)

    @classmethod
    def build(cls, n: int, nonneg: bool = False, **blocks) -> MixedSystem:
        """Convenience constructor: ``MixedSystem.build(2, le=([[1, 2]], [3]))``."""
        out = []
        for name, (A, b) in blocks.items():
            if A is None:
                continue
            out.append(Block(RelationKind(name), RatMat.from_rows(A, cols=n), vec(b)))
        return cls(n, tuple(out), nonneg)

    def block(self, kind: RelationKind) -> Block | None:
        for blk in self.blocks:
            if blk.kind is kind:
                return blk
        return None

    @property
    def total_rows(self) -> int:
        return sum(blk.m for blk in self.blocks)


@dataclass(frozen=True)
class PrimalWitness:
    x: RatVec


@dataclass(frozen=True)
class DualCertificate:
    """Multipliers for the present blocks only; absent kinds mean ``lambda_j = 0``."""

    lambdas: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "lambdas", {k: tuple(v) for k, v in sorted(self.lambdas.items())})

    def get(self, kind: RelationKind) -> RatVec | None:
        return self.lambdas.get(kind)

    def __hash__(self):
        return hash(tuple(self.lambdas.items()))


@dataclass(frozen=True)
class Feasible:
    witness: PrimalWitness

    @property
    def tag(self) -> str:
        return "feasible"


@dataclass(frozen=True)
class Infeasible:
    certificate: DualCertificate

    @property
    def tag(self) -> str:
        return "infeasible"


Verdict = Union[Feasible, Infeasible]


def relation_set(s: MixedSystem) -> frozenset:
    return frozenset(blk.kind for blk in s.blocks)


def scale_row(s: MixedSystem, kind: RelationKind, row: int, c) -> MixedSystem:
    """Multiply one row of a block, and its right-hand side, by ``c > 0``."""
    c = rat(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    blk = s.block(kind)
    if blk is None:
        raise KeyError(f"no {kind.value} block")
    if not 0 <= row < blk.m:
        raise IndexError(f"row {row} out of range for {kind.value} block")
    data = list(blk.A.data)
    data[row] = tuple(v * c for v in data[row])
    b = list(blk.b)
    b[row] *= c
    new = Block(kind, RatMat(blk.m, blk.A.cols, tuple(data)), tuple(b))
    return MixedSystem(s.n, tuple(new if x.kind is kind else x for x in s.blocks), s.nonneg)


def clear_denominators(s: MixedSystem) -> MixedSystem:
    """Scale every row by the lcm of its denominators so all data is integral."""
    out = s
    for blk in s.blocks:
        for i in range(blk.m):
            d = lcm_denominator(blk.A.row(i) + (blk.b[i],))
            if d != 1:
                out = scale_row(out, blk.kind, i, d)
    return out


# -- JSON -------------------------------------------------------------------

def _rats(values: Sequence[Fraction]) -> list:
    return [format_rat(v) for v in values]


def system_to_json(s: MixedSystem) -> dict:
    return {
        "n": s.n,
        "nonneg": s.nonneg,
        "blocks": [
            {"kind": blk.kind.value, "A": [_rats(r) for r in blk.A], "b": _rats(blk.b)}
            for blk in s.blocks
        ],
    }


def system_from_json(obj) -> MixedSystem:
    try:
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError("'n' must be an integer")
        nonneg = obj.get("nonneg", False)
        if not isinstance(nonneg, bool):
            raise InputError("'nonneg' must be a boolean")
        blocks = []
        for raw in obj.get("blocks", []):
            kind = RelationKind(raw["kind"])
            A = RatMat.from_rows(raw["A"], cols=n)
            blocks.append(Block(kind, A, vec(raw["b"])))
        return MixedSystem(n, tuple(blocks), nonneg)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"bad system: {exc}") from exc


def witness_to_json(w: PrimalWitness) -> dict:
    return {"x": _rats(w.x)}


def certificate_to_json(c: DualCertificate) -> dict:
    return {"lambda": {k.value: _rats(v) for k, v in c.lambdas.items()}}


def verdict_to_json(v: Verdict) -> dict:
    if isinstance(v, Feasible):
        return {"verdict": "feasible", **witness_to_json(v.witness)}
    return {"verdict": "infeasible", **certificate_to_json(v.certificate)}


def proof_from_json(obj) -> PrimalWitness | DualCertificate:
    """Parse a witness (``{"x": ...}``) or certificate (``{"lambda": ...}``)."""
    try:
        if "x" in obj:
            return PrimalWitness(vec(obj["x"]))
        if "lambda" in obj:
            return DualCertificate({RelationKind(k): vec(v) for k, v in obj["lambda"].items()})
    except (TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"bad proof object: {exc}") from exc
    raise InputError("proof object needs an 'x' or a 'lambda' key")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))
