"""Window engine, subspace enumeration, and the Lie ideal classifier."""

import pytest

from exrings.errors import ContextError
from exrings.matrices import M2_GF2, M2_GF4, M2_POLY2, M2_TPOLY2, Mat2
from exrings.scalars import Poly
from exrings.subgroups import (
    AdditiveSubgroup,
    LieIdealClass,
    bracket_subgroup,
    c_span,
    classify_lie_ideal,
    count_subspaces,
    engel_subgroup,
    enumerate_subspaces,
    gaussian_binomial,
    ideal_window,
    is_lie_ideal,
    iter_subspace_bases,
    parse_generator_file,
    parse_generator_line,
    ring_window,
    subring_closure,
)

T = Poly.t()


def e(i, j, ctx=M2_POLY2):
    return Mat2.unit(ctx, i, j)


def trace_zero_group(ctx):
    mats = [Mat2.identity(ctx), e(1, 2, ctx), e(2, 1, ctx)]
    return AdditiveSubgroup.from_elements(ctx, mats, kind="poly-full")


def test_window_dims():
    assert ring_window(M2_POLY2).slice(6).dim == 24
    assert ideal_window(M2_POLY2, T).slice(6).dim == 20
    # augmentation context: constant terms are excluded
    assert ring_window(M2_TPOLY2).slice(6).dim == 20


def test_ideal_window_membership():
    ideal = ideal_window(M2_POLY2, T)
    sl = ideal.slice(4)
    assert sl.contains(e(1, 2).scale(T))
    assert sl.contains(e(2, 1).scale(T * T + T))
    assert not sl.contains(e(1, 2))
    assert ideal.closed_under_t()


def test_bracket_of_ring_is_trace_zero_window():
    r = ring_window(M2_POLY2)
    got = bracket_subgroup(r, r, 6).slice(6)
    want = trace_zero_group(M2_POLY2).slice(6)
    assert got.dim == want.dim == 18
    assert got.contains_slice(want) and want.contains_slice(got)


def test_engel_window_chain():
    r = ring_window(M2_POLY2)
    tz = trace_zero_group(M2_POLY2)
    assert engel_subgroup(r, 2, 6).slice(6).dim == 18
    assert engel_subgroup(r, 3, 6).slice(6).dim == 18
    # brackets of trace-zero elements land in the scalars, then die
    e2 = engel_subgroup(tz, 2, 6).slice(6)
    assert e2.dim == 6
    assert e2.contains(Mat2.identity(M2_POLY2).scale(T * T))
    assert engel_subgroup(tz, 3, 6).slice(6).is_zero


def test_engel_chain_gf2():
    r = ring_window(M2_GF2)
    sl2 = AdditiveSubgroup.from_elements(
        M2_GF2, [Mat2.identity(M2_GF2), e(1, 2, M2_GF2), e(2, 1, M2_GF2)]
    )
    dims = [engel_subgroup(r, m, 4).slice(4).dim for m in (1, 2, 3, 4)]
    assert dims == [4, 3, 3, 3]
    dims = [engel_subgroup(sl2, m, 4).slice(4).dim for m in (1, 2, 3)]
    assert dims == [3, 1, 0]


def test_subring_closure():
    pair = AdditiveSubgroup.from_elements(M2_GF2, [e(1, 2, M2_GF2), e(2, 1, M2_GF2)])
    assert subring_closure(pair, 4).slice(4).dim == 4

    lone = AdditiveSubgroup.from_elements(M2_POLY2, [e(1, 2)])
    assert subring_closure(lone, 6).slice(6).dim == 1

    scalars = AdditiveSubgroup.from_elements(
        M2_POLY2, [Mat2.identity(M2_POLY2).scale(T)], kind="poly-full"
    )
    assert subring_closure(scalars, 5).slice(5).dim == 4


def test_is_lie_ideal():
    assert is_lie_ideal(ring_window(M2_POLY2))
    assert is_lie_ideal(trace_zero_group(M2_POLY2))
    lone = AdditiveSubgroup.from_elements(M2_POLY2, [e(1, 2)])
    assert not is_lie_ideal(lone)  # [e12, e21] = 1 escapes


def test_classify_polynomial():
    ctx = M2_POLY2
    center = AdditiveSubgroup.from_elements(ctx, [Mat2.identity(ctx)], kind="poly-full")
    abelian = AdditiveSubgroup.from_elements(
        ctx, [Mat2.identity(ctx), e(1, 2)], kind="poly-full"
    )
    r = ring_window(ctx)
    assert classify_lie_ideal(center) is LieIdealClass.CENTRAL
    assert classify_lie_ideal(abelian) is LieIdealClass.ABELIAN_NONCENTRAL
    assert classify_lie_ideal(bracket_subgroup(r, r, 8)) is LieIdealClass.TYPE_I
    assert classify_lie_ideal(r) is LieIdealClass.TYPE_II
    lone = AdditiveSubgroup.from_elements(ctx, [e(1, 2)])
    with pytest.raises(ContextError):
        classify_lie_ideal(lone)


def test_classify_finite():
    for ctx in (M2_GF2, M2_GF4):
        one = Mat2.identity(ctx)
        cases = [
            ([one], LieIdealClass.CENTRAL),
            ([one, e(1, 2, ctx)], LieIdealClass.ABELIAN_NONCENTRAL),
            ([one, e(1, 2, ctx), e(2, 1, ctx)], LieIdealClass.TYPE_I),
            ([one, e(1, 1, ctx), e(1, 2, ctx), e(2, 1, ctx)], LieIdealClass.TYPE_II),
        ]
        if ctx is M2_GF4:
            u = ctx.domain.u()
            cases = [
                (mats + [m.scale(u) for m in mats], cls) for mats, cls in cases
            ]
        for mats, cls in cases:
            sub = AdditiveSubgroup.from_elements(ctx, mats)
            assert classify_lie_ideal(sub) is cls


def test_subspace_counts():
    assert count_subspaces(4) == 67
    assert sum(1 for _ in iter_subspace_bases(4)) == 67
    assert count_subspaces(8) == 417199
    assert sum(gaussian_binomial(4, k, 3) for k in range(5)) == 212


def test_gf2_lie_ideal_census():
    ideals = [s for s in enumerate_subspaces(M2_GF2) if is_lie_ideal(s)]
    assert len(ideals) == 7


def test_c_span_collapses_scalar_multiples():
    sub = AdditiveSubgroup.from_elements(M2_POLY2, [e(1, 2), e(1, 2).scale(T)])
    assert c_span(sub).dim == 1


def test_parse_generator_file():
    text = """
    # leading comment
    bits e12
    poly-full 1  # trailing comment
    poly-ideal t e11
    """
    sub = parse_generator_file(text, M2_POLY2)
    sl = sub.slice(4)
    assert sl.dim == 8
    assert sl.contains(e(1, 1).scale(T * T * T))
    assert sl.contains(Mat2.identity(M2_POLY2))
    assert not sl.contains(e(1, 1))
    assert not sl.contains(e(2, 1))


def test_parse_generator_line_errors():
    with pytest.raises(ValueError):
        parse_generator_line("frobnicate e12", M2_POLY2)
    with pytest.raises(ValueError):
        parse_generator_line("bits", M2_POLY2)
    with pytest.raises(ValueError):
        parse_generator_line("poly-ideal e12", M2_POLY2)


def test_slice_contains_sums():
    sl = ring_window(M2_POLY2).slice(3)
    picks = sl.basis()
    assert sl.contains(picks[0] + picks[-1] + picks[len(picks) // 2])
