"""Seeded instance generators with construction-based ground truth.

Randomness comes from SplitMix64 so that suites replay bit-for-bit on any
platform and in any language::

    state += 0x9E3779B97F4A7C15                       (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9          (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB          (mod 2**64)
    return z ^ (z >> 31)

An integer in ``[lo, hi]`` is ``lo + next() % (hi - lo + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_linalg import RatMat
from .model import Block, DualCertificate, MixedSystem, PrimalWitness, RelationKind, KINDS

MASK64 = (1 << 64) - 1
MAX_RETRIES = 1000


class GenerationError(ValueError):
    """The requested configuration admits no construction."""


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    n: int = 2
    rows: dict = field(default_factory=lambda: {RelationKind.LE: 2})
    coeff_range: int = 3
    nonneg: bool = False
    homogeneous: bool = False

    def __post_init__(self):
        rows = {RelationKind(k) if isinstance(k, str) else k: int(v) for k, v in dict(self.rows).items()}
        object.__setattr__(self, "rows", {k: rows[k] for k in KINDS if rows.get(k, 0) > 0})

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "n": self.n,
            "rows": {k.value: v for k, v in self.rows.items()},
            "coeff_range": self.coeff_range,
            "nonneg": self.nonneg,
            "homogeneous": self.homogeneous,
        }


def _ints(rng: SplitMix64, count: int, lo: int, hi: int) -> list:
    return [rng.randint(lo, hi) for _ in range(count)]


def _assemble(cfg: GenConfig, A: dict, b: dict) -> MixedSystem:
    blocks = []
    for kind, m in cfg.rows.items():
        blocks.append(Block(kind, RatMat(m, cfg.n, tuple(tuple(Fraction(v) for v in r) for r in A[kind])),
                            tuple(Fraction(v) for v in b[kind])))
    return MixedSystem(cfg.n, tuple(blocks), cfg.nonneg)


def gen_random(cfg: GenConfig) -> MixedSystem:
    """Uniform entries in ``[-c, c]``; no feasibility guarantee."""
    rng = SplitMix64(cfg.seed)
    c = cfg.coeff_range
    A, b = {}, {}
    for kind, m in cfg.rows.items():
        A[kind] = [_ints(rng, cfg.n, -c, c) for _ in range(m)]
        b[kind] = [0] * m if cfg.homogeneous else _ints(rng, m, -c, c)
    return _assemble(cfg, A, b)


def gen_feasible(cfg: GenConfig) -> tuple[MixedSystem, PrimalWitness]:
    """Draw a point ``x*`` first, then right-hand sides that ``x*`` satisfies."""
    rng = SplitMix64(cfg.seed)
    if cfg.homogeneous:
        return _gen_feasible_homogeneous(cfg, rng)
    c = cfg.coeff_range
    cs = max(c, 1)
    x = _ints(rng, cfg.n, 0 if cfg.nonneg else -c, c)
    A, b = {}, {}
    for kind, m in cfg.rows.items():
        rows = [_ints(rng, cfg.n, -c, c) for _ in range(m)]
        ax = [sum(p * q for p, q in zip(r, x)) for r in rows]
        if kind is RelationKind.EQ:
            slack = [0] * m
        elif kind is RelationKind.LE:
            slack = _ints(rng, m, 0, c)
        elif kind is RelationKind.LT:
            slack = _ints(rng, m, 0, c)
            slack[rng.randint(0, m - 1)] = rng.randint(1, cs)
        else:
            slack = _ints(rng, m, 1, cs)
        A[kind] = rows
        b[kind] = [p + q for p, q in zip(ax, slack)]
    return _assemble(cfg, A, b), PrimalWitness(tuple(Fraction(v) for v in x))


def _gen_feasible_homogeneous(cfg: GenConfig, rng: SplitMix64):
    c = cfg.coeff_range
    strict = RelationKind.LT in cfg.rows or RelationKind.LL in cfg.rows
    if strict and (cfg.n == 0 or c == 0):
        raise GenerationError("homogeneous strict relations need n >= 1 and c >= 1")
    for _ in range(MAX_RETRIES):
        x = _ints(rng, cfg.n, 0 if cfg.nonneg else -c, c)
        if strict and not any(x):
            continue
        A = {}
        ok = True
        for kind, m in cfg.rows.items():
            rows = []
            for _ in range(m):
                for _ in range(MAX_RETRIES):
                    r = _ints(rng, cfg.n, -c, c)
                    v = sum(p * q for p, q in zip(r, x))
                    if v > 0:
                        r, v = [-p for p in r], -v
                    if kind is RelationKind.EQ and v != 0:
                        continue
                    if kind is RelationKind.LL and v == 0:
                        continue
                    break
                else:
                    ok = False
                rows.append(r)
            if kind is RelationKind.LT and ok:
                values = [sum(p * q for p, q in zip(r, x)) for r in rows]
                if not any(values):
                    ok = False
            A[kind] = rows
        if ok:
            b = {kind: [0] * m for kind, m in cfg.rows.items()}
            return _assemble(cfg, A, b), PrimalWitness(tuple(Fraction(v) for v in x))
    raise GenerationError("could not build a homogeneous feasible instance")


def gen_infeasible(cfg: GenConfig) -> tuple[MixedSystem, DualCertificate]:
    """Draw multipliers first, then a system they refute.

    One pivot row with multiplier +-1 absorbs the corrections that make the
    combined coefficients and right side come out as required, which keeps
    all data integral.
    """
    if not cfg.rows:
        raise GenerationError("at least one relation kind must have rows")
    rng = SplitMix64(cfg.seed)
    c = cfg.coeff_range
    cs = max(c, 1)
    kinds = list(cfg.rows)
    modes = ([] if cfg.homogeneous else ["sum"])
    if RelationKind.LT in cfg.rows:
        modes.append("lt")
    if RelationKind.LL in cfg.rows:
        modes.append("ll")
    if not modes:
        raise GenerationError("homogeneous systems without strict relations are always feasible")
    mode = rng.choice(modes)

    lam = {}
    for kind, m in cfg.rows.items():
        lo = -c if kind is RelationKind.EQ else 0
        lam[kind] = _ints(rng, m, lo, c)
    if mode == "lt":
        lam[RelationKind.LT] = _ints(rng, cfg.rows[RelationKind.LT], 1, cs)
    elif mode == "ll":
        m4 = cfg.rows[RelationKind.LL]
        lam[RelationKind.LL][rng.randint(0, m4 - 1)] = rng.randint(1, cs)

    pk = rng.choice(kinds)
    pr = rng.randint(0, cfg.rows[pk] - 1)
    sign = rng.choice([1, -1]) if pk is RelationKind.EQ else 1
    lam[pk][pr] = sign

    A = {kind: [_ints(rng, cfg.n, -c, c) for _ in range(m)] for kind, m in cfg.rows.items()}
    target = _ints(rng, cfg.n, 0, c) if cfg.nonneg else [0] * cfg.n
    for j in range(cfg.n):
        g = sum(lam[k][i] * A[k][i][j] for k in kinds for i in range(cfg.rows[k]))
        A[pk][pr][j] += (target[j] - g) * sign

    if cfg.homogeneous:
        b = {kind: [0] * m for kind, m in cfg.rows.items()}
    else:
        b = {kind: _ints(rng, m, -c, c) for kind, m in cfg.rows.items()}
        want = rng.randint(-cs, -1) if mode == "sum" else rng.randint(-c, 0)
        got = sum(lam[k][i] * b[k][i] for k in kinds for i in range(cfg.rows[k]))
        b[pk][pr] += (want - got) * sign

    cert = DualCertificate({k: tuple(Fraction(v) for v in lam[k]) for k in kinds})
    return _assemble(cfg, A, b), cert
