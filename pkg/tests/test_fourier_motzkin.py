from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from alterna.exact_linalg import RatMat, mat_mul, mat_vec, vec
from alterna.fourier_motzkin import (
    PreconditionError,
    _clean_step,
    _hygiene,
    back_substitute,
    eliminate_variable,
    project_all,
)
from oracles import naive_projection_feasible, satisfies_le


def M(rows, cols=None):
    return RatMat.from_rows(rows, cols)


def small_system(max_n=3, max_m=5, c=3):
    return st.tuples(st.integers(1, max_n), st.integers(0, max_m)).flatmap(
        lambda nm: st.tuples(
            st.lists(st.lists(st.integers(-c, c), min_size=nm[0], max_size=nm[0]), min_size=nm[1], max_size=nm[1]),
            st.lists(st.integers(-c, c), min_size=nm[1], max_size=nm[1]),
            st.just(nm[0]),
        )
    )


def test_eliminate_worked_example():
    step = eliminate_variable(M([[1, 1], [-1, 0], [0, 1]]), vec([2, 0, 1]), 0)
    assert (step.I0, step.Iplus, step.Iminus) == ((2,), (0,), (1,))
    assert step.E == M([[0, 0, 1], [1, 1, 0]])
    assert step.A_out == M([[0, 1], [0, 1]])
    assert step.b_out == (1, 2)


def test_eliminate_absent_variable():
    step = eliminate_variable(M([[0, 1]]), vec([3]), 0)
    assert step.Iplus == step.Iminus == ()
    assert step.E == M([[1]])
    assert step.A_out == M([[0, 1]]) and step.b_out == (3,)


def test_eliminate_detects_contradiction():
    step = eliminate_variable(M([[1], [-1]]), vec([1, -2]), 0)
    assert step.E == M([[1, 1]])
    assert step.A_out == M([[0]]) and step.b_out == (-1,)


def test_eliminate_bad_column():
    with pytest.raises(IndexError):
        eliminate_variable(M([[1]]), vec([1]), 1)


def test_project_all_examples():
    tr = project_all(M([[1], [-1]]), vec([1, -2]))
    assert not tr.feasible and tr.final_b == (-1,)
    tr = project_all(M([[1], [-1]]), vec([3, -2]))
    assert tr.feasible
    tr = project_all(RatMat.zeros(0, 3), ())
    assert tr.steps == () and tr.feasible


def test_back_substitute_examples():
    A, b = M([[1], [-1]]), vec([3, -2])
    assert back_substitute(project_all(A, b), A, b) == (F(5, 2),)
    A, b = M([[1]]), vec([4])
    assert back_substitute(project_all(A, b), A, b) == (4,)
    A = RatMat.zeros(0, 1)
    assert back_substitute(project_all(A, ()), A, ()) == (0,)


def test_back_substitute_precondition():
    A, b = M([[1], [-1]]), vec([1, -2])
    with pytest.raises(PreconditionError):
        back_substitute(project_all(A, b), A, b)


def test_greedy_order_prefers_cheap_columns():
    # column 0 pairs 2x2 rows, column 1 is one-sided
    A = M([[1, 1], [1, 2], [-1, 3], [-1, 1]])
    tr = project_all(A, vec([1, 1, 1, 1]))
    assert tr.steps[0].col == 1


@settings(max_examples=200, deadline=None)
@given(small_system(), st.data())
def test_lemma_invariants(sys_, data):
    A_rows, b, n = sys_
    A = M(A_rows, n)
    col = data.draw(st.integers(0, n - 1))
    step = eliminate_variable(A, vec(b), col)
    assert step.E.is_nonnegative()
    assert all(v == 0 for v in mat_mul(step.E, A).column(col))
    assert step.E.rows == len(step.I0) + len(step.Iplus) * len(step.Iminus)


@settings(max_examples=200, deadline=None)
@given(small_system(), st.data())
def test_clean_step_equals_hygiene_after_raw(sys_, data):
    A_rows, b, n = sys_
    A, b = M(A_rows, n), vec(b)
    col = data.draw(st.integers(0, n - 1))
    raw = eliminate_variable(A, b, col)
    H = _hygiene(raw.A_out, raw.b_out)
    fused = _clean_step(A, b, col)
    assert fused.E == mat_mul(H, raw.E)
    assert fused.A_out == mat_mul(H, raw.A_out)
    assert fused.b_out == mat_vec(H, raw.b_out)


@settings(max_examples=300, deadline=None)
@given(small_system())
def test_projection_matches_naive_oracle(sys_):
    A_rows, b, n = sys_
    A, bv = M(A_rows, n), vec(b)
    tr = project_all(A, bv)
    assert tr.feasible == naive_projection_feasible([list(r) for r in A], list(bv))
    assert tr.cumulative.is_nonnegative()
    assert mat_mul(tr.cumulative, A).is_zero()
    assert tr.final_b == mat_vec(tr.cumulative, bv)
    if tr.feasible:
        x = back_substitute(tr, A, bv)
        assert satisfies_le(A.data, bv, x)
