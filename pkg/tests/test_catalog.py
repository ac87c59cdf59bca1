
import pytest

from alterna.catalog import (
    LL_POS,
    LT_POS,
    SUM_NEG,
    DualShape,
    TheoremVariant,
    conforms,
    dual_shape,
    enumerate_variants,
    named_theorems,
    variant_of,
)
from alterna.generators import GenConfig, GenerationError, gen_feasible, gen_infeasible
from alterna.model import Infeasible, RelationKind as K
from alterna.unified import solve_unified
from alterna.verifier import verify_verdict

TABLE = {
    "Freedholm": ({K.EQ}, False, False),
    "Farkas": ({K.EQ}, True, False),
    "Gale I": ({K.LE}, False, False),
    "Gale II": ({K.LE}, True, False),
    "Stiemke": ({K.LT}, False, True),
    "Mangasarian": ({K.LT}, True, False),
    "Gordan": ({K.LL}, False, True),
    "Ville": ({K.LL}, True, True),
    "Farkas II": ({K.EQ, K.LE}, True, False),
    "Antosiewicz I": ({K.LE, K.LT}, False, True),
    "Antosiewicz II": ({K.LE, K.LL}, False, True),
    "Tucker": ({K.EQ, K.LE, K.LT}, False, True),
    "Motzkin": ({K.EQ, K.LE, K.LL}, False, True),
    "Slater": ({K.EQ, K.LE, K.LT, K.LL}, False, True),
    "Geanakoplos": ({K.EQ, K.LE, K.LL}, False, False),
}


def test_sixty_distinct_variants():
    vs = enumerate_variants()
    assert len(vs) == 60 == len(set(vs))
    assert all(v.relations for v in vs)
    assert TheoremVariant(frozenset({K.LE}), False, False) in vs


def test_enumeration_order():
    vs = enumerate_variants()
    assert [(v.nonneg, v.homogeneous) for v in vs[:4]] == [(False, False), (False, True), (True, False), (True, True)]
    assert vs[0].relations == {K.EQ} and vs[4].relations == {K.LE} and vs[-1].relations == set(K)


@pytest.mark.parametrize("name", sorted(TABLE))
def test_named_transcription(name):
    rels, nonneg, hom = TABLE[name]
    v = named_theorems()[name]
    assert (v.relations, v.nonneg, v.homogeneous) == (rels, nonneg, hom)
    assert v in enumerate_variants()


def test_morris_excluded():
    assert "Morris" not in named_theorems()
    assert len(named_theorems()) == 15


def test_gale_dual_shape():
    assert dual_shape(named_theorems()["Gale I"]) == DualShape(
        multipliers=(K.LE,), sign_constrained=(K.LE,), l_mode="eq", r_condition=False, s_disjuncts=(SUM_NEG,))
    assert dual_shape(named_theorems()["Gale I"]).render() == "lambda2 >= 0, lambda2^T A2 = 0, lambda2^T b2 < 0"


def test_gordan_dual_shape():
    d = dual_shape(named_theorems()["Gordan"])
    assert d.s_disjuncts == (LL_POS,) and not d.r_condition and d.sign_constrained == (K.LL,)
    inhom = dual_shape(TheoremVariant(frozenset({K.LL}), False, False))
    assert inhom.s_disjuncts == (SUM_NEG, LL_POS) and inhom.r_condition


def test_freedholm_dual_shape():
    d = dual_shape(named_theorems()["Freedholm"])
    assert d.sign_constrained == () and d.l_mode == "eq" and d.s_disjuncts == (SUM_NEG,)


def test_nonneg_flips_l_mode():
    assert dual_shape(named_theorems()["Farkas"]).l_mode == "ge"
    assert dual_shape(named_theorems()["Slater"]).s_disjuncts == (LT_POS, LL_POS)


def test_homogeneous_without_strictness_has_empty_dual():
    d = dual_shape(TheoremVariant(frozenset({K.EQ, K.LE}), False, True))
    assert d.s_disjuncts == ()


@pytest.mark.parametrize("idx", range(60))
def test_every_variant_solves_with_its_shape(idx):
    v = enumerate_variants()[idx]
    shape = dual_shape(v)
    rows = {k: 1 + (idx + k.index) % 2 for k in v.relations}
    for seed in range(4):
        cfg = GenConfig(1000 * idx + seed, 2, rows, 3, v.nonneg, v.homogeneous)
        for gen in (gen_feasible, gen_infeasible):
            try:
                s, _ = gen(cfg)
            except GenerationError:
                continue
            got = variant_of(s)
            assert (got.relations, got.nonneg) == (v.relations, v.nonneg)
            if v.homogeneous:
                assert got.homogeneous
            verdict = solve_unified(s)
            assert verify_verdict(s, verdict)
            if isinstance(verdict, Infeasible):
                assert conforms(shape, verdict.certificate)
            assert verdict.tag == ("feasible" if gen is gen_feasible else "infeasible")
