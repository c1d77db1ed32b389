import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieposet import (
    QQ,
    NotACocycle,
    NotACocycleAtOrderOne,
    NotCentral,
    Poset,
    build_algebra,
    build_nerve,
    chain,
    deform_02,
    deform_11,
    deform_20,
    h2_decomposition,
    infinitesimal_of,
    jacobi_check,
    parse_field,
    sphere,
)
from lieposet.deform import DeformedBracket, deformation_from_class, poly_mul, specialized_jacobi_ok
from lieposet.nerve import SimplicialCochain, apply_coboundary

F7 = parse_field("fp:7")
SL3_EXAMPLE = Poset(3, [(1, 2)])


@pytest.fixture(scope="module", params=[QQ, F7], ids=str)
def field(request):
    return request.param


def test_h2_decompositions(field):
    assert h2_decomposition(build_algebra(SL3_EXAMPLE, field)).dims == (1, 0, 0)
    H = h2_decomposition(build_algebra(sphere(1), field))
    assert H.dims == (0, 3, 0) and H.dim_h2 == 3
    H = h2_decomposition(build_algebra(sphere(2), field))
    assert H.dims == (0, 0, 1) and H.consistent
    assert h2_decomposition(build_algebra(chain(4), field)).dims == (0, 0, 0)


def test_h2_representatives_are_independent_cocycles():
    from lieposet.complex import reduce_class

    for P in (SL3_EXAMPLE, sphere(1), sphere(2)):
        H = h2_decomposition(build_algebra(P))
        reps = [r for rs in H.representatives.values() for r in rs]
        assert len(reps) == H.dim_h2
        for r in reps:
            assert r.complex.delta(r).is_zero()
            assert not reduce_class(r).is_zero()


def test_deform_20_sl3(field):
    alg = build_algebra(SL3_EXAMPLE, field)
    d = deform_20(alg, (1, 2), {"eta1": 1, "eta2": 2})
    assert jacobi_check(d).verdict and d.is_antisymmetric()
    inf = infinitesimal_of(d)
    assert inf.types == ("20",) and not inf.is_zero
    assert inf.reduced.coeffs == {((0, 1), 0): 1, ((0, 1), 1): 2}
    # at t = 1 the two eta no longer commute
    assert d.specialize(1)[(0, 1)] == {0: 1, 1: 2}
    assert d.specialize(0) == DeformedBracket(alg).specialize(0)


def test_deform_20_errors():
    alg = build_algebra(chain(3))
    with pytest.raises(NotCentral):
        deform_20(alg, (1, 2), {"eta1": 1})
    base = build_algebra(SL3_EXAMPLE)
    assert deform_20(base, (1, 2), {}) == DeformedBracket(base)


def test_deform_11_sphere1(field):
    alg = build_algebra(sphere(1), field)
    f = SimplicialCochain(1, {(1, 3): 1}, field)
    d = deform_11(alg, {0: 1}, f)
    assert jacobi_check(d).verdict
    inf = infinitesimal_of(d)
    assert inf.types == ("11",) and not inf.is_zero
    assert deform_11(alg, {}, f) == DeformedBracket(alg)


def test_deform_11_coboundary_is_trivial(field):
    alg = build_algebra(sphere(1), field)
    nerve = build_nerve(alg.poset, False)
    f = apply_coboundary(nerve, SimplicialCochain(0, {(3,): 1, (1,): 2}, field))
    assert infinitesimal_of(deform_11(alg, {0: 1, 2: 3}, f)).is_zero


def test_deform_11_needs_cocycle():
    alg = build_algebra(chain(3))
    with pytest.raises(NotACocycle):
        deform_11(alg, {0: 1}, SimplicialCochain(1, {(1, 2): 1}, QQ))


def test_deform_02_sphere2(field):
    alg = build_algebra(sphere(2), field)
    d = deformation_from_class(alg, "02")
    assert jacobi_check(d).verdict
    inf = infinitesimal_of(d)
    assert inf.types == ("02",) and not inf.is_zero
    nerve = build_nerve(alg.poset, False)
    b = apply_coboundary(nerve, SimplicialCochain(1, {(1, 3): 1, (4, 6): 2}, field))
    assert infinitesimal_of(deform_02(alg, b)).is_zero
    assert deform_02(alg, SimplicialCochain(2, {}, field)) == DeformedBracket(alg)


def test_cohomologous_inputs_give_equal_classes():
    alg = build_algebra(sphere(2))
    nerve = build_nerve(alg.poset, False)
    f = SimplicialCochain(2, {(1, 3, 5): 1}, QQ)
    b = apply_coboundary(nerve, SimplicialCochain(1, {(2, 4): 1}, QQ))
    g = SimplicialCochain(2, {s: f.values.get(s, 0) + b.values.get(s, 0) for s in set(f.values) | set(b.values)}, QQ)
    assert infinitesimal_of(deform_02(alg, f)).reduced == infinitesimal_of(deform_02(alg, g)).reduced


def test_deform_02_needs_cocycle():
    # chain(4) has a 3-simplex, so an arbitrary 2-cochain need not be closed
    alg = build_algebra(chain(4))
    with pytest.raises(NotACocycle):
        deform_02(alg, SimplicialCochain(2, {(1, 2, 3): 1}, QQ))


def test_jacobi_detects_corruption():
    alg = build_algebra(sphere(1))
    d = DeformedBracket(alg)
    assert jacobi_check(d).verdict
    e13, e14 = alg.index[alg.basis[3]], alg.index[alg.basis[4]]
    d.set_bracket(e13, e14, {e13: [0, 1]})
    cert = jacobi_check(d)
    assert not cert.verdict and cert.witness and cert.t_power == 1
    with pytest.raises(NotACocycleAtOrderOne):
        infinitesimal_of(d)


def test_base_bracket_has_zero_class():
    inf = infinitesimal_of(DeformedBracket(build_algebra(sphere(1))))
    assert inf.is_zero and inf.types == ()


@given(st.integers(-20, 20), st.integers(1, 5))
@settings(max_examples=30)
def test_specializations_satisfy_jacobi(num, den):
    t = Fraction(num, den)
    alg = build_algebra(SL3_EXAMPLE)
    assert specialized_jacobi_ok(deform_20(alg, (1, 2), {"eta1": 1, "eta2": 2}), t)
    alg = build_algebra(sphere(1))
    assert specialized_jacobi_ok(deform_11(alg, {1: 1}, SimplicialCochain(1, {(2, 4): 1}, QQ)), t)


def test_specialize_sphere2_over_f7():
    d = deformation_from_class(build_algebra(sphere(2), F7), "02")
    for t in range(7):
        assert specialized_jacobi_ok(d, t)


def test_poly_mul():
    assert poly_mul([1, 1], [1, 6], F7) == [1, 0, 6]
