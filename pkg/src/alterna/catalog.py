"""The 60 special cases of the unified alternative and the classical named ones."""

from __future__ import annotations

from dataclasses import dataclass

from .model import DualCertificate, MixedSystem, RelationKind as K

EQ, LE, LT, LL = K.EQ, K.LE, K.LT, K.LL

SUM_NEG = "sum<0"
LT_POS = "lambda3>>0"
LL_POS = "lambda4>0"


@dataclass(frozen=True)
class TheoremVariant:
    relations: frozenset
    nonneg: bool
    homogeneous: bool
    name: str | None = None

    @property
    def key(self) -> tuple:
        return (_mask(self.relations), self.nonneg, self.homogeneous)

    def __eq__(self, other):
        return isinstance(other, TheoremVariant) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "relations": [k.value for k in sorted(self.relations)],
            "nonneg": self.nonneg,
            "homogeneous": self.homogeneous,
            "dual": dual_shape(self).to_json(),
        }


@dataclass(frozen=True)
class DualShape:
    """What the dual system looks like after dropping absent relations.

    ``r_condition`` is False when ``sum lam^T b <= 0`` is redundant: either
    b = 0, or the only strictness disjunct left is ``sum lam^T b < 0``.
    An empty ``s_disjuncts`` means the dual is unsatisfiable.
    """

    multipliers: tuple
    sign_constrained: tuple
    l_mode: str  # "eq" or "ge"
    r_condition: bool
    s_disjuncts: tuple

    def to_json(self) -> dict:
        return {
            "multipliers": [k.value for k in self.multipliers],
            "sign_constrained": [k.value for k in self.sign_constrained],
            "L": self.l_mode,
            "R": self.r_condition,
            "S": list(self.s_disjuncts),
        }

    def render(self) -> str:
        if not self.multipliers:
            return "0 < 0"
        sub = {EQ: "1", LE: "2", LT: "3", LL: "4"}
        parts = [f"lambda{sub[k]} >= 0" for k in self.sign_constrained]
        lam_a = " + ".join(f"lambda{sub[k]}^T A{sub[k]}" for k in self.multipliers)
        lam_b = " + ".join(f"lambda{sub[k]}^T b{sub[k]}" for k in self.multipliers)
        parts.append(f"{lam_a} {'=' if self.l_mode == 'eq' else '>='} 0")
        if self.r_condition:
            parts.append(f"{lam_b} <= 0")
        words = {SUM_NEG: f"{lam_b} < 0", LT_POS: "lambda3 >> 0", LL_POS: "lambda4 > 0"}
        parts.append(" or ".join(words[d] for d in self.s_disjuncts) if self.s_disjuncts else "0 < 0")
        return ", ".join(parts)


def _mask(relations) -> int:
    return sum(1 << (k.index - 1) for k in relations)


def _from_mask(mask: int) -> frozenset:
    return frozenset(k for k in K if mask >> (k.index - 1) & 1)


_TABLE = [
    ("Freedholm", (EQ,), False, False),
    ("Farkas", (EQ,), True, False),
    ("Gale I", (LE,), False, False),
    ("Gale II", (LE,), True, False),
    ("Stiemke", (LT,), False, True),
    ("Mangasarian", (LT,), True, False),
    ("Gordan", (LL,), False, True),
    ("Ville", (LL,), True, True),
    ("Farkas II", (EQ, LE), True, False),
    ("Antosiewicz I", (LE, LT), False, True),
    ("Antosiewicz II", (LE, LL), False, True),
    # Morris is a disjunction over systems, not one of the 60 cases
    ("Tucker", (EQ, LE, LT), False, True),
    ("Motzkin", (EQ, LE, LL), False, True),
    ("Slater", (EQ, LE, LT, LL), False, True),
    ("Geanakoplos", (EQ, LE, LL), False, False),
]


def named_theorems() -> dict:
    return {
        name: TheoremVariant(frozenset(rels), nonneg, hom, name)
        for name, rels, nonneg, hom in _TABLE
    }


def enumerate_variants() -> list:
    names = {v.key: v.name for v in named_theorems().values()}
    out = []
    for mask in range(1, 16):
        for nonneg in (False, True):
            for hom in (False, True):
                key = (mask, nonneg, hom)
                out.append(TheoremVariant(_from_mask(mask), nonneg, hom, names.get(key)))
    return out


def dual_shape(v: TheoremVariant) -> DualShape:
    rels = v.relations
    s = []
    if not v.homogeneous:
        s.append(SUM_NEG)
    if LT in rels:
        s.append(LT_POS)
    if LL in rels:
        s.append(LL_POS)
    r_needed = not v.homogeneous and s != [SUM_NEG]
    return DualShape(
        multipliers=tuple(sorted(rels)),
        sign_constrained=tuple(k for k in sorted(rels) if k is not EQ),
        l_mode="ge" if v.nonneg else "eq",
        r_condition=r_needed,
        s_disjuncts=tuple(s),
    )


def variant_of(s: MixedSystem) -> TheoremVariant:
    rels = frozenset(blk.kind for blk in s.blocks)
    hom = all(x == 0 for blk in s.blocks for x in blk.b)
    v = TheoremVariant(rels, s.nonneg, hom)
    names = {w.key: w.name for w in named_theorems().values()}
    return TheoremVariant(rels, s.nonneg, hom, names.get(v.key))


def conforms(shape: DualShape, c: DualCertificate) -> bool:
    """The certificate carries multipliers exactly for the shape's relations."""
    return tuple(sorted(c.lambdas)) == shape.multipliers
