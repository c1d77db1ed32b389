import random

import pytest
from hypothesis import given, settings, strategies as st

from lieposet import QQ, E, Eta, Poset, build_algebra, chain, module_create, parse_field, random_poset, sphere, weight_uniqueness_counterexamples
from lieposet.algebra import AlgebraError, jacobi_failures, parse_label, root_weight
from lieposet.nerve import build_nerve, simplicial_cohomology

F7 = parse_field("fp:7")
SL3_EXAMPLE = Poset(3, [(1, 2)])


def matrix_of(alg, x):
    """Element as an N x N integer matrix (eta_k = e_kk - e_k+1,k+1)."""
    n = alg.N
    m = [[0] * n for _ in range(n)]
    for k, v in x.items():
        b = alg.basis[k]
        if b.is_eta:
            m[b.i - 1][b.i - 1] += v
            m[b.i][b.i] -= v
        else:
            m[b.i - 1][b.j - 1] += v
    return m


def commutator(a, b):
    n = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def test_weights_chain3():
    A = build_algebra(chain(3))
    assert A.weight_of(E(1, 2)) == (2, -1)
    assert A.weight_of(E(1, 3)) == (1, 1)
    assert root_weight(2, 3, 3) == (-1, 2)


def test_basis_order_and_labels():
    A = build_algebra(sphere(1))
    assert [str(b) for b in A.basis] == ["eta1", "eta2", "eta3", "e13", "e14", "e23", "e24"]
    assert parse_label("e1,12") == E(1, 12) and str(E(1, 12)) == "e1,12"
    with pytest.raises(AlgebraError):
        A.element({"e12": 1})


@given(st.integers(0, 10**9), st.integers(2, 6))
@settings(max_examples=60)
def test_bracket_matches_matrix_commutator(seed, n):
    A = build_algebra(random_poset(n, random.Random(seed)))
    for a in range(A.dim):
        for b in range(A.dim):
            got = matrix_of(A, A.bracket({a: 1}, {b: 1}))
            assert got == commutator(matrix_of(A, {a: 1}), matrix_of(A, {b: 1}))


def test_sl3_example_center():
    A = build_algebra(SL3_EXAMPLE)
    assert A.center_elements() == [{0: 1, 1: 2}]  # eta1 + 2 eta2


@given(st.integers(0, 10**9), st.integers(1, 6), st.sampled_from([QQ, F7]))
@settings(max_examples=60)
def test_center_dimension_is_nerve_h0(seed, n, field):
    P = random_poset(n, random.Random(seed))
    A = build_algebra(P, field)
    assert A.center().dim == simplicial_cohomology(build_nerve(P, True), field, False).dim(0)


def test_jacobi_failures_detects_corruption():
    A = build_algebra(chain(3))
    assert jacobi_failures(A.dim, A.bracket, A.field) == []

    def bad(x, y):
        out = A.bracket(x, y)
        if x == {2: 1} and y == {4: 1}:
            out = {3: 2}
        return out

    assert jacobi_failures(A.dim, bad, A.field)


def test_modules():
    A = build_algebra(sphere(1))
    assert module_create(A, "Trivial").dim == 1
    assert module_create(A, "Adjoint").acting == list(range(7))
    assert module_create(A, "AdjointRestrictedToIdeal").acting == [3, 4, 5, 6]
    assert A.module("adjoint").action(0, 3) == {3: 1}
    with pytest.raises(AlgebraError):
        module_create(A, "coadjoint")


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("p", [5, 7])
def test_weight_uniqueness_exhaustive(n, p):
    assert weight_uniqueness_counterexamples(n, p) == ([], [])


def test_weight_uniqueness_can_fail_for_small_p():
    # mod 3, w12 + w12-type cancellations appear once p <= N
    fail_i, fail_ii = weight_uniqueness_counterexamples(4, 3)
    assert fail_i or fail_ii
