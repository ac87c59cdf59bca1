"""Hypothesis strategies for mixed systems and proof objects."""

from fractions import Fraction

from hypothesis import strategies as st

from alterna.exact_linalg import RatMat
from alterna.model import Block, DualCertificate, MixedSystem, PrimalWitness, RelationKind

small = st.integers(-3, 3)


@st.composite
def mixed_systems(draw, max_n=3, max_rows=5, kinds=None, nonneg=None):
    n = draw(st.integers(0, max_n))
    present = kinds if kinds is not None else draw(st.sets(st.sampled_from(list(RelationKind))))
    blocks = []
    budget = max_rows
    for k in sorted(present, key=lambda k: k.index):
        m = draw(st.integers(1, max(1, min(3, budget))))
        budget -= m
        A = [[Fraction(draw(small)) for _ in range(n)] for _ in range(m)]
        b = [Fraction(draw(small)) for _ in range(m)]
        blocks.append(Block(k, RatMat(m, n, tuple(map(tuple, A))), tuple(b)))
    nn = draw(st.booleans()) if nonneg is None else nonneg
    return MixedSystem(n, tuple(blocks), nn)


def witnesses(s):
    return st.lists(small.map(Fraction), min_size=s.n, max_size=s.n).map(lambda x: PrimalWitness(tuple(x)))


def certificates(s):
    parts = {}
    for blk in s.blocks:
        lo = -3 if blk.kind is RelationKind.EQ else 0
        parts[blk.kind] = st.lists(st.integers(lo, 3).map(Fraction), min_size=blk.m, max_size=blk.m)
    return st.fixed_dictionaries(parts).map(DualCertificate)
