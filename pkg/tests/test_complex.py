import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from lieposet import (
    ADJOINT,
    ADJOINT_ON_IDEAL,
    QQ,
    TRIVIAL,
    DimensionMismatch,
    IncompatiblePairing,
    NotHomogeneous,
    Poset,
    bigraded_decompose,
    build_algebra,
    build_nerve,
    ce_coboundary,
    chain,
    cohomology,
    complex_for,
    complex_for_acting,
    contract,
    cup,
    parse_field,
    phi,
    random_poset,
    rank,
    rho,
    sigma,
    sphere,
    tensor_factorization_check,
    weight_decompose,
    weight_identity_check,
)
from lieposet.complex import eta_dual, normalize, phi_matrix, reduce_class, unit_cochain, weight_zero_part
from lieposet.nerve import SimplicialCochain, apply_coboundary

from _util import random_cochain, random_scalar

F7 = parse_field("fp:7")
SL3_EXAMPLE = Poset(3, [(1, 2)])

ALGEBRAS = {
    (name, str(f)): build_algebra(P, f)
    for name, P in [("sphere1", sphere(1)), ("chain3", chain(3))]
    for f in (QQ, F7)
}
algebras = st.sampled_from(sorted(ALGEBRAS)).map(ALGEBRAS.get)
seeds = st.integers(0, 10**9)


def random_h(alg, rng):
    return {k: v for k in alg.h_indices if (v := random_scalar(rng, alg.field))} or {0: 1}


def test_normalize():
    assert normalize((3, 1, 2)) == (1, (1, 2, 3))
    assert normalize((2, 1)) == (-1, (1, 2))
    assert normalize((1, 1))[0] == 0


# -- fixed values -------------------------------------------------------------
# Dimensions frozen from tests/oracles/ce_dense.py (dense matrices, sympy ranks).


@pytest.mark.parametrize("field", [QQ, F7, parse_field("fp:5")], ids=str)
def test_chain3_trivial(field):
    cx = complex_for(build_algebra(chain(3), field), TRIVIAL)
    assert list(cohomology(cx).dims().values()) == [1, 2, 1, 0, 0, 0]


@pytest.mark.parametrize("wz", [False, True])
def test_sphere1_adjoint(wz):
    cx = complex_for(build_algebra(sphere(1)), ADJOINT, wz)
    assert list(cohomology(cx).dims().values()) == [0, 1, 3, 3, 1, 0, 0, 0]


def test_sl3_example_adjoint():
    cx = complex_for(build_algebra(SL3_EXAMPLE), ADJOINT)
    assert list(cohomology(cx).dims().values()) == [1, 2, 1, 0]


def test_adjoint_h0_kernel_is_center():
    cx = complex_for(build_algebra(SL3_EXAMPLE), ADJOINT)
    d0 = ce_coboundary(cx, 0)
    assert cx.dim(0) - rank(d0) == 1


def test_ideal_h0_sphere1():
    cx = complex_for(build_algebra(sphere(1)), ADJOINT_ON_IDEAL, True)
    assert cx.dim(0) == 3  # C^0(k, g)_0 = h
    assert cohomology(cx).dim(0) == 0


def test_ideal_adjoint_full_matches_oracle():
    cx = complex_for_acting(build_algebra(sphere(1)), ADJOINT, "k", False)
    assert list(cohomology(cx).dims().values()) == [4, 13, 18, 12, 3]


def test_sphere2_weight_zero_degree3_dimension():
    alg = build_algebra(sphere(2))
    cx = complex_for(alg, ADJOINT, True)
    # brute-force count over every (3-subset, module element) pair
    count = 0
    for args in combinations(range(alg.dim), 3):
        w = [sum(alg.weights[a][k] for a in args) for k in range(alg.n_h)]
        count += sum(1 for m in range(alg.dim) if list(alg.weights[m]) == w)
    assert cx.dim(3) == count == 210


def test_ideal_trivial_vanishes_above_zero():
    for P in (sphere(1), chain(4), sphere(2)):
        cx = complex_for_acting(build_algebra(P), TRIVIAL, "k", True)
        d = cohomology(cx).dims()
        assert d[0] == 1 and not any(v for n, v in d.items() if n)


@given(seeds, st.integers(2, 5))
@settings(max_examples=15)
def test_no_spurious_weights_above_n(seed, n):
    alg = build_algebra(random_poset(n, random.Random(seed)), F7)
    cx = complex_for(alg, ADJOINT, True)
    assert all(not cx.spurious_keys(k) for k in range(0, 4))


# -- identities on random cochains -----------------------------------------


@given(algebras, seeds, st.booleans())
def test_delta_squared(alg, seed, adjoint):
    rng = random.Random(seed)
    cx = complex_for(alg, ADJOINT if adjoint else TRIVIAL)
    n = rng.randrange(0, cx.top_degree - 1)
    F = random_cochain(cx, n, rng)
    assert cx.delta(cx.delta(F)).is_zero()


@given(algebras, seeds)
def test_delta_matches_matrix(alg, seed):
    rng = random.Random(seed)
    cx = complex_for(alg, ADJOINT)
    n = rng.randrange(0, 4)
    F = random_cochain(cx, n, rng)
    assert cx.to_vector(cx.delta(F)) == cx.coboundary_matrix(n).apply(cx.to_vector(F))


@given(algebras, seeds)
def test_weight_decompose(alg, seed):
    rng = random.Random(seed)
    cx = complex_for(alg, ADJOINT)
    F = random_cochain(cx, rng.randrange(0, 4), rng)
    parts = weight_decompose(F)
    total = cx.cochain(F.degree, {})
    seen = set()
    for w, part in parts.items():
        assert part.weights() == {w}
        assert not seen & set(part.coeffs)
        seen |= set(part.coeffs)
        total = total + part
    assert total == F


@given(algebras, seeds)
def test_weight_identity(alg, seed):
    rng = random.Random(seed)
    cx = complex_for(alg, ADJOINT)
    F = random_cochain(cx, rng.randrange(1, 4), rng)
    h = random_h(alg, rng)
    for part in weight_decompose(F).values():
        assert weight_identity_check(h, part)


@given(algebras, seeds)
def test_contraction_anticommutes_on_weight_zero(alg, seed):
    rng = random.Random(seed)
    cx = complex_for(alg, ADJOINT, True)
    F = random_cochain(cx, rng.randrange(1, 4), rng)
    h = random_h(alg, rng)
    assert contract(h, cx.delta(F)) == -cx.delta(contract(h, F))
    if F.degree >= 2:
        assert contract(h, contract(h, F)).is_zero()


def test_weight_identity_rejects_mixed_weights():
    alg = ALGEBRAS[("sphere1", "q")]
    cx = complex_for(alg, ADJOINT)
    F = cx.cochain(1, {((3,), 3): 1, ((3,), 4): 1})
    with pytest.raises(NotHomogeneous):
        weight_identity_check({0: 1}, F)


def test_contract_dual_cochain():
    alg = ALGEBRAS[("sphere1", "q")]
    cx = complex_for(alg, ADJOINT)
    F = cx.cochain(1, {((0,), 5): 1})
    assert contract({0: 1}, F).coeffs == {((), 5): 1}


@given(algebras, seeds)
def test_cup_leibniz(alg, seed):
    rng = random.Random(seed)
    tcx, acx = complex_for(alg, TRIVIAL), complex_for(alg, ADJOINT)
    r, s = rng.randrange(0, 3), rng.randrange(0, 3)
    F, G = random_cochain(tcx, r, rng), random_cochain(acx, s, rng)
    lhs = acx.delta(cup(F, G))
    rhs = cup(tcx.delta(F), G) + cup(F, acx.delta(G)).scale(-1 if r % 2 else 1)
    assert lhs == rhs


def test_cup_examples():
    alg = ALGEBRAS[("chain3", "q")]
    tcx = complex_for(alg, TRIVIAL)
    G = random_cochain(complex_for(alg, ADJOINT), 2, random.Random(1))
    assert cup(unit_cochain(alg), G) == G
    F, H = tcx.cochain(1, {((0,), 0): 2, ((2,), 0): 1}), tcx.cochain(1, {((0,), 0): 1, ((3,), 0): 5})
    FH = cup(F, H)
    for x in range(alg.dim):
        for y in range(alg.dim):
            if x != y:
                want = F(x).get(0, 0) * H(y).get(0, 0) - F(y).get(0, 0) * H(x).get(0, 0)
                assert FH(x, y).get(0, 0) == want
    with pytest.raises(IncompatiblePairing):
        cup(G, G)


@given(algebras, seeds)
def test_sigma_rho(alg, seed):
    rng = random.Random(seed)
    kcx = complex_for(alg, ADJOINT_ON_IDEAL, True)
    m = rng.randrange(0, 3)
    G = random_cochain(kcx, m, rng)
    r = rng.randrange(0, alg.n_h + 1)
    I = tuple(sorted(rng.sample(alg.h_indices, r)))
    F = rho(I, G)
    assert set(bigraded_decompose(F)) <= {r}
    for J, part in sigma(F, r).items():
        assert part.coeffs == (G.coeffs if J == I else {})


def test_sigma_kernel_and_trivial_cases():
    alg = ALGEBRAS[("sphere1", "q")]
    kcx = complex_for(alg, ADJOINT_ON_IDEAL, True)
    G = random_cochain(kcx, 1, random.Random(4))
    F = rho((), G)
    assert F.coeffs == G.coeffs
    assert sigma(F, 0) == {(): F}
    assert all(v.is_zero() for v in sigma(F, 1).values())


@given(algebras, seeds)
def test_bigraded_components_preserved(alg, seed):
    rng = random.Random(seed)
    cx = complex_for(alg, ADJOINT, True)
    n = rng.randrange(0, 4)
    F = random_cochain(cx, n, rng)
    parts = bigraded_decompose(F)
    assert len(parts) <= min(n, alg.n_h) + 1
    for r, part in parts.items():
        assert set(bigraded_decompose(cx.delta(part))) <= {r}


# -- the nerve map ------------------------------------------------------------


def test_phi_edge_indicator():
    alg = build_algebra(chain(3))
    F = phi(alg, SimplicialCochain(1, {(1, 2): 1}, QQ))
    e12 = alg.index[alg.basis[2]]
    assert F.coeffs == {((e12,), e12): 1}


def test_phi_degree_zero_is_trace_free_diagonal():
    alg = build_algebra(SL3_EXAMPLE)
    F = phi(alg, SimplicialCochain(0, {(1,): 1, (2,): 1, (3,): -2}, QQ))
    assert F.coeffs == {((), 0): 1, ((), 1): 2}  # eta1 + 2 eta2 = diag(1, 1, -2)


def test_phi_rejects_bad_input():
    alg = build_algebra(chain(3))
    with pytest.raises(DimensionMismatch):
        phi(alg, SimplicialCochain(-1, {(): 1}, QQ))
    with pytest.raises(DimensionMismatch):
        phi(build_algebra(sphere(1)), SimplicialCochain(1, {(1, 2): 1}, QQ))


@given(algebras, seeds)
def test_phi_chain_map(alg, seed):
    rng = random.Random(seed)
    nerve = build_nerve(alg.poset, True)
    kcx = complex_for(alg, ADJOINT_ON_IDEAL, True)
    n = rng.randrange(0, nerve.max_dim + 1)
    simp = nerve.simplices(n)
    f = SimplicialCochain(n, {s: random_scalar(rng, alg.field) for s in simp}, alg.field)
    lhs = kcx.delta(phi(alg, f))
    if n < nerve.max_dim:
        assert lhs == phi(alg, apply_coboundary(nerve, f))
    else:
        assert lhs.is_zero()


@given(seeds, st.integers(2, 6), st.sampled_from([QQ, F7]))
@settings(max_examples=25)
def test_phi_bijective(seed, n, field):
    alg = build_algebra(random_poset(n, random.Random(seed)), field)
    nerve = build_nerve(alg.poset, True)
    kcx = complex_for(alg, ADJOINT_ON_IDEAL, True)
    for m in range(0, kcx.top_degree + 1):
        ns = len(nerve.simplices(m))
        if m == 0:
            assert kcx.dim(0) == ns - 1 and rank(phi_matrix(alg, nerve, 0)) == ns - 1
        else:
            assert kcx.dim(m) == ns
            assert ns == 0 or rank(phi_matrix(alg, nerve, m)) == ns


# -- factorisation ------------------------------------------------------------


def test_factorization_sphere1():
    rep = tensor_factorization_check(build_algebra(sphere(1)), ADJOINT)
    assert rep.ok and rep.left == {0: 0, 1: 1, 2: 3, 3: 3, 4: 1, 5: 0, 6: 0, 7: 0}
    assert rep.nerve == {0: 0, 1: 1, 2: 0, 3: 0, 4: 0}


def test_factorization_chain4_rigid():
    rep = tensor_factorization_check(build_algebra(chain(4)), ADJOINT)
    assert rep.ok and not any(rep.left.values()) and not any(rep.right.values())


def test_factorization_sphere1_trivial():
    rep = tensor_factorization_check(build_algebra(sphere(1)), TRIVIAL)
    assert rep.ok and rep.right == {n: comb(3, n) for n in range(8)}


@given(seeds, st.integers(1, 5), st.sampled_from([QQ, F7]))
@settings(max_examples=20)
def test_viviani_random(seed, n, field):
    alg = build_algebra(random_poset(n, random.Random(seed)), field)
    for kind in (TRIVIAL, ADJOINT):
        degs = range(0, min(alg.dim, 5) + 1)
        assert cohomology(complex_for(alg, kind), degs).dims() == cohomology(complex_for(alg, kind, True), degs).dims()


def test_reduce_class_canonical():
    alg = build_algebra(sphere(1))
    cx = complex_for(alg, ADJOINT, True)
    rng = random.Random(9)
    reps = [c for c in cohomology(cx, [2], representatives=True).rows[0].representatives]
    z = reps[0]
    b = cx.delta(random_cochain(cx, 1, rng))
    assert reduce_class(z + b) == reduce_class(z)
    assert reduce_class(b).is_zero()
    assert weight_zero_part(z) == z
