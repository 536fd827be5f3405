"""Matrix layer: bracket algebra and the characteristic-2 trace facts."""

from hypothesis import given, strategies as st

from exrings.matrices import (
    M2_GF2,
    M2_GF4,
    M2_POLY2,
    Mat2,
    all_matrices,
    commutator,
    engel,
    in_commutator_space,
    is_central,
    iterated_bracket,
    parse_matrix,
    square_central,
)
from exrings.scalars import Poly

small_polys = st.builds(Poly, st.integers(min_value=0, max_value=63))
poly_mats = st.builds(
    lambda a, b, c, d: Mat2(M2_POLY2, (a, b, c, d)),
    small_polys,
    small_polys,
    small_polys,
    small_polys,
)


@given(poly_mats, poly_mats, poly_mats)
def test_jacobi_identity(x, y, z):
    total = (
        commutator(x, commutator(y, z))
        + commutator(y, commutator(z, x))
        + commutator(z, commutator(x, y))
    )
    assert total.is_zero


@given(poly_mats)
def test_cayley_hamilton_char2(m):
    # m^2 = tr(m)*m + det(m)*1 in characteristic 2
    lhs = m * m
    rhs = m.scale(m.trace()) + Mat2.identity(M2_POLY2).scale(m.det())
    assert (lhs + rhs).is_zero


@given(poly_mats, poly_mats)
def test_trace_kills_commutators(x, y):
    assert commutator(x, y).trace().is_zero


@given(poly_mats, poly_mats, st.integers(min_value=1, max_value=5))
def test_engel_matches_iterated_bracket(x, y, m):
    # left-normed [y,x,...,x] versus right-normed ad_x^m(y); equal in char 2
    assert engel([y] + [x] * m) == iterated_bracket([x] * m, y)


@given(poly_mats)
def test_square_of_ad_is_ad_of_square(x):
    # ad_x(ad_x(z)) = ad_{x^2}(z) in characteristic 2
    z = Mat2.unit(M2_POLY2, 1, 2) + Mat2.unit(M2_POLY2, 2, 1).scale(Poly.t())
    assert commutator(x, commutator(x, z)) == commutator(x * x, z)


def test_three_way_equivalence_exhaustive_finite():
    for ctx in (M2_GF2, M2_GF4):
        for m in all_matrices(ctx):
            a = in_commutator_space(m)
            b = m.trace().is_zero
            c = square_central(m)
            assert a == b == c, m


@given(poly_mats)
def test_three_way_equivalence_polynomial(m):
    assert in_commutator_space(m) == m.trace().is_zero == square_central(m)


def test_central_means_scalar():
    t = Poly.t()
    assert is_central(Mat2.identity(M2_POLY2).scale(t * t + t))
    assert not is_central(Mat2.unit(M2_POLY2, 1, 1).scale(t))


def test_parse_round_trip():
    m = parse_matrix("[[t, t+1],[0, t^3]]", M2_POLY2)
    assert m.entry(1, 1) == Poly.t()
    assert m.entry(2, 2) == Poly.parse("t^3")
    assert parse_matrix(str(m), M2_POLY2) == m


def test_gf2_matrix_count():
    assert len(all_matrices(M2_GF2)) == 16
    assert len(all_matrices(M2_GF4)) == 256
