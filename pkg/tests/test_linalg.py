import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbundles.groups import FgAbelianGroup
from gbundles.linalg import (
    IntMatrix,
    cokernel_invariants,
    image_basis,
    kernel_basis,
    kernel_rank,
    smith_normal_form,
    solve_integer,
    subquotient,
)
from oracles import determinantal_divisors


def M(rows, cols=None):
    return IntMatrix.from_rows(rows, cols)


def check_snf(a):
    d = smith_normal_form(a)
    assert d.u @ a @ d.v == d.s
    assert abs(d.u.determinant()) == 1
    assert abs(d.v.determinant()) == 1
    s = d.s
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j:
                assert s[i, j] == 0
    diag = d.diagonal
    assert all(x >= 0 for x in diag)
    nonzero = [x for x in diag if x]
    assert list(diag[: len(nonzero)]) == nonzero, "zeros must trail"
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    return d


def test_intmatrix_rejects_bad_entry_count():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))


def test_empty_shapes_allowed():
    for r, c in [(0, 0), (0, 3), (3, 0)]:
        z = IntMatrix.zeros(r, c)
        d = check_snf(z)
        assert d.u.shape == (r, r) and d.v.shape == (c, c)


@pytest.mark.parametrize(
    "rows, diag",
    [
        ([[1, 0], [0, 1]], (1, 1)),
        ([[0]], (0,)),
        ([[2, 4], [6, 8]], (2, 4)),
        ([[2, 1], [1, 2]], (1, 3)),
    ],
)
def test_snf_examples(rows, diag):
    d = check_snf(M(rows))
    assert d.diagonal == diag


def test_identity_transforms_admissible():
    d = smith_normal_form(IntMatrix.identity(2))
    assert d.s == IntMatrix.identity(2)


@pytest.mark.parametrize(
    "rows", [[[2, 4], [6, 8]], [[2, 1], [1, 2]], [[4, 6, 0], [0, 10, 4]], [[0, 0], [0, 0], [0, 5]]]
)
def test_snf_matches_determinantal_divisors(rows):
    a = M(rows)
    assert list(smith_normal_form(a).elementary_divisors) == determinantal_divisors(a)


def test_snf_randomised_against_minors():
    rng = random.Random(20261018)
    for _ in range(150):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        a = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)], c)
        d = check_snf(a)
        assert list(d.elementary_divisors) == determinantal_divisors(a)


def test_large_entries_stay_exact():
    big = 10**30
    a = M([[big, big + 1], [big - 1, big]])
    d = check_snf(a)
    assert d.diagonal == (1, 1)


def test_cokernel_examples():
    assert cokernel_invariants(IntMatrix.zeros(2, 0)) == FgAbelianGroup(2)
    assert cokernel_invariants(IntMatrix.diagonal([2, 3])) == FgAbelianGroup(0, (6,))
    assert cokernel_invariants(M([[2], [0]])) == FgAbelianGroup(1, (2,))


def test_kernel_rank_examples():
    assert kernel_rank(IntMatrix.identity(3)) == 0
    assert kernel_rank(IntMatrix.zeros(3, 4)) == 4
    assert kernel_rank(M([[2, 4], [6, 8]])) == 0


small = st.integers(min_value=-9, max_value=9)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    return IntMatrix(r, c, tuple(draw(st.lists(small, min_size=r * c, max_size=r * c))))


@st.composite
def unimodular(draw, n):
    """Product of random elementary matrices."""
    u = IntMatrix.identity(n).tolist()
    for _ in range(draw(st.integers(0, 6))):
        if n < 2:
            break
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if i == j:
            u[i] = [-x for x in u[i]]
        else:
            q = draw(st.integers(-3, 3))
            u[i] = [x + q * y for x, y in zip(u[i], u[j])]
    return IntMatrix.from_rows(u, n)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(a):
    assert kernel_rank(a) + smith_normal_form(a).rank == a.cols


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_cokernel_invariant_under_unimodular_and_permutation(data):
    a = data.draw(matrices(max_dim=4))
    u = data.draw(unimodular(a.rows))
    v = data.draw(unimodular(a.cols))
    perm_r = data.draw(st.permutations(range(a.rows)))
    perm_c = data.draw(st.permutations(range(a.cols)))
    base = cokernel_invariants(a)
    assert cokernel_invariants(u @ a @ v) == base
    assert cokernel_invariants(a.submatrix(perm_r, perm_c)) == base


@settings(max_examples=100, deadline=None)
@given(matrices(max_dim=4))
def test_kernel_basis_spans_kernel(a):
    k = kernel_basis(a)
    assert (a @ k).is_zero()
    assert k.cols == kernel_rank(a)
    # saturated: the basis extends to a unimodular matrix, so its columns
    # have trivial cokernel torsion
    assert not cokernel_invariants(k).invariant_factors


def test_solve_integer():
    a = M([[2, 0], [0, 3]])
    b = M([[4], [9]])
    x = solve_integer(a, b)
    assert a @ x == b
    with pytest.raises(ValueError):
        solve_integer(a, M([[1], [0]]))


def test_image_basis_and_subquotient():
    gens = M([[2, 4, 6], [0, 0, 0]])
    basis = image_basis(gens)
    assert basis.cols == 1
    # K = Z^2, I = <(2,0)> gives Z + Z/2
    assert subquotient(IntMatrix.identity(2), M([[2], [0]])) == FgAbelianGroup(1, (2,))
    # K = 2Z + Z, I = <(4,0),(0,3)> gives Z/2 + Z/3 = Z/6
    assert subquotient(M([[2, 0], [0, 1]]), M([[4, 0], [0, 3]])) == FgAbelianGroup(0, (6,))


def test_determinant():
    assert M([[2, 1], [1, 2]]).determinant() == 3
    assert M([[0, 1], [1, 0]]).determinant() == -1
    assert IntMatrix.identity(0).determinant() == 1
