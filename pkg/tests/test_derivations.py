"""Derivation combinators, inner-witness solving, and generalized maps."""

import random

import pytest
from hypothesis import given, strategies as st

from exrings.derivations import (
    ComposedSquare,
    EntrywiseDerivative,
    GLMap,
    InnerDerivation,
    ScaledDerivation,
    SumDerivation,
    abelian_family,
    ad_glmap,
    center_action,
    derivations_equal,
    identity_glmap,
    is_x_outer,
    iterated_ad_glmap,
    parse_derivation,
    probe_set,
    resolve_inner,
    second_order_decomposition,
)
from exrings.errors import ContextError
from exrings.matrices import M2_POLY2, Mat2, commutator, is_central, promote, sample_matrix
from exrings.scalars import Poly, Rat
from exrings.subgroups import FieldSpan

small_polys = st.builds(Poly, st.integers(min_value=0, max_value=63))
poly_mats = st.builds(
    lambda a, b, c, d: Mat2(M2_POLY2, (a, b, c, d)),
    small_polys,
    small_polys,
    small_polys,
    small_polys,
)

DT = EntrywiseDerivative()
E11 = Mat2.unit(M2_POLY2, 1, 1)
E12 = Mat2.unit(M2_POLY2, 1, 2)
T = Poly.t()


def example_derivations():
    return [
        DT,
        InnerDerivation(E11 + E12.scale(T)),
        ScaledDerivation(T * T, DT),
        SumDerivation((DT, InnerDerivation(E12))),
        ComposedSquare(SumDerivation((DT, InnerDerivation(E11)))),
    ]


@given(poly_mats, poly_mats)
def test_leibniz(x, y):
    for d in example_derivations():
        lhs = d.apply(x * y)
        rhs = d.apply(x) * y + x * d.apply(y)
        assert (lhs + rhs).is_zero, d


@given(poly_mats, poly_mats)
def test_additivity(x, y):
    for d in example_derivations():
        assert d.apply(x + y) == d.apply(x) + d.apply(y)


def test_center_action_values():
    cc = M2_POLY2.central_closure()
    one = cc.domain.parse("1")
    assert center_action(DT, M2_POLY2) == one
    assert center_action(ScaledDerivation(T, DT), M2_POLY2) == cc.domain.parse("t")
    assert center_action(SumDerivation((DT, InnerDerivation(E11))), M2_POLY2) == one
    assert center_action(InnerDerivation(E11), M2_POLY2).is_zero
    assert is_x_outer(DT, M2_POLY2)
    assert not is_x_outer(InnerDerivation(E12), M2_POLY2)


def test_resolve_inner_round_trip():
    cc = M2_POLY2.central_closure()
    for b in (E11, E12, E11 + E12.scale(T), E12.scale(T * T + T) + Mat2.unit(M2_POLY2, 2, 1)):
        res = resolve_inner(InnerDerivation(b), M2_POLY2)
        assert res.is_inner
        assert is_central(res.witness + promote(b, cc))
    out = resolve_inner(DT, M2_POLY2)
    assert not out.is_inner
    assert is_central(out.certificate) and not out.certificate.is_zero


def test_second_order_decomposition():
    mu, h = second_order_decomposition(DT, M2_POLY2)
    assert mu.is_zero and h.is_zero

    mu, h = second_order_decomposition(ScaledDerivation(T, DT), M2_POLY2)
    assert mu == Rat(Poly.one()) and h.is_zero

    mu, h = second_order_decomposition(SumDerivation((DT, InnerDerivation(E11))), M2_POLY2)
    cc = M2_POLY2.central_closure()
    assert mu.is_zero and h == promote(E11, cc)

    with pytest.raises(ContextError):
        second_order_decomposition(InnerDerivation(E11), M2_POLY2)


def test_decomposition_is_sound():
    # d*d really equals mu*d + [h, -] on the probe set
    for d in (ScaledDerivation(T, DT), SumDerivation((DT, InnerDerivation(E11 + E12)))):
        mu, h = second_order_decomposition(d, M2_POLY2)
        recomposed = SumDerivation((ScaledDerivation(mu, d), InnerDerivation(h)))
        assert derivations_equal(ComposedSquare(d), recomposed, M2_POLY2)


def test_probe_set_separates():
    assert len(probe_set(M2_POLY2)) == 5
    assert derivations_equal(DT, DT, M2_POLY2)
    assert not derivations_equal(DT, ScaledDerivation(T, DT), M2_POLY2)


def test_parse_derivation():
    ctx = M2_POLY2
    cases = [
        ("dt", DT),
        ("inner e11+e12", InnerDerivation(E11 + E12)),
        ("scale (t^2) dt", ScaledDerivation(Poly.parse("t^2"), DT)),
        ("sum(dt, inner e12)", SumDerivation((DT, InnerDerivation(E12)))),
    ]
    for text, want in cases:
        assert derivations_equal(parse_derivation(text, ctx), want, ctx), text
    with pytest.raises(ValueError):
        parse_derivation("bogus", ctx)


def random_glmap(ctx, rng, max_terms=4):
    k = rng.randrange(1, max_terms + 1)
    return GLMap(
        ctx,
        tuple((sample_matrix(ctx, rng, 3), sample_matrix(ctx, rng, 3)) for _ in range(k)),
    )


def test_glmap_involution_laws():
    ctx = M2_POLY2
    rng = random.Random(7)
    for _ in range(60):
        f, g = random_glmap(ctx, rng), random_glmap(ctx, rng)
        assert f.star().star() == f
        assert f.compose(g).star() == g.star().compose(f.star())
        assert (f + g).star() == f.star() + g.star()
    ident = identity_glmap(ctx)
    assert ident.star() == ident


def test_glmap_matches_bracket():
    ctx = M2_POLY2
    rng = random.Random(11)
    a = sample_matrix(ctx, rng, 3)
    b = sample_matrix(ctx, rng, 3)
    f = iterated_ad_glmap([a, b])
    for _ in range(20):
        x = sample_matrix(ctx, rng, 3)
        assert f.apply(x) == commutator(a, commutator(b, x))
    assert ad_glmap(a).star() == ad_glmap(a)  # bracketing maps are self-adjoint


def test_trace_glmap_properties():
    ctx = M2_POLY2
    e = lambda i, j: Mat2.unit(ctx, i, j)
    tr = GLMap(
        ctx,
        (
            (e(1, 1), e(1, 1)),
            (e(1, 2), e(2, 1)),
            (e(2, 1), e(1, 2)),
            (e(2, 2), e(2, 2)),
        ),
    )
    assert tr.maps_into_center()
    assert tr.vanishes_on_commutators()
    assert tr.star() == tr
    rng = random.Random(13)
    for _ in range(20):
        x = sample_matrix(ctx, rng, 3)
        assert tr.apply(x) == Mat2.identity(ctx).scale(x.trace())


def test_abelian_family():
    spans = abelian_family(DT, M2_POLY2, 4)
    assert len(spans) == 4
    cc = spans[0].ctx
    for sp in spans:
        assert sp.dim == 2
        assert sp.is_lie_ideal()
        assert sp.is_abelian()
        assert any(not is_central(b) for b in sp.basis())
        w = next(b for b in sp.basis() if not is_central(b))
        assert not sp.contains(promote(DT.apply(w), cc))
    for i, a in enumerate(spans):
        for b in spans[i + 1 :]:
            assert a != b
    with pytest.raises(ContextError):
        abelian_family(InnerDerivation(E11), M2_POLY2, 2)
