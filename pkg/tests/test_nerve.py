import random

import pytest
from hypothesis import given, strategies as st

from lieposet import QQ, CharacteristicTooSmall, build_nerve, chain, parse_field, random_poset, simplicial_coboundary, simplicial_cohomology, sphere
from lieposet.nerve import SimplicialCochain, apply_coboundary

F7 = parse_field("fp:7")


@pytest.mark.parametrize(
    "n,reduced",
    # reduced Betti numbers of S^n: a single class in degree n
    [(0, {-1: 0, 0: 1}), (1, {-1: 0, 0: 0, 1: 1}), (2, {-1: 0, 0: 0, 1: 0, 2: 1})],
)
def test_spheres(n, reduced):
    res = simplicial_cohomology(build_nerve(sphere(n), True), QQ)
    assert res.dims() == reduced


def test_unaugmented_sphere1():
    assert simplicial_cohomology(build_nerve(sphere(1), False), QQ).dims() == {0: 1, 1: 1}


def test_chain_is_contractible():
    assert set(simplicial_cohomology(build_nerve(chain(4), True), QQ).dims().values()) == {0}


def test_minus_one_coboundary_is_all_ones():
    d = simplicial_coboundary(build_nerve(sphere(1), True), -1, QQ)
    assert d.to_dense() == [[1]] * 4


def test_augmented_refuses_small_characteristic():
    with pytest.raises(CharacteristicTooSmall):
        simplicial_cohomology(build_nerve(chain(7), True), F7)


@given(st.integers(0, 10**9), st.integers(2, 6), st.sampled_from([QQ, F7]))
def test_dd_zero_and_representatives(seed, n, field):
    P = random_poset(n, random.Random(seed))
    cx = build_nerve(P, True)
    for m in range(cx.min_dim, cx.max_dim):
        assert (simplicial_coboundary(cx, m + 1, field) @ simplicial_coboundary(cx, m, field)).is_zero()
    res = simplicial_cohomology(cx, field)
    for row in res.rows:
        assert len(row.representatives) == row.dim_h
        for f in row.representatives:
            if row.degree < cx.max_dim:
                assert not apply_coboundary(cx, f).values
    # reduced Euler characteristic = sum (-1)^m #simplices
    assert res.euler_characteristic() == sum((-1) ** (m % 2) * c for m, c in cx.counts().items())


def test_cochain_dimension_checked():
    with pytest.raises(ValueError):
        SimplicialCochain(1, {(1, 2, 3): 1})
