"""Shared fixtures and helpers used by several theorem checkers.

Everything here is deterministic: cached windows, named subgroup
constructions over M2(GF(2)[t]), the small GF(3) span machinery for the
nonexceptional sanity checks, and a tiny dense kernel solver over the
field-scalar contexts.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations, product

from ..errors import ContextError
from ..finite_tables import tables
from ..gf2linalg import reduce_low
from ..matrices import (
    CONTEXTS,
    M2_GF3,
    M2_POLY2,
    Mat2,
    commutator,
    is_central,
    sample_matrix,
)
from ..scalars import F3, Poly
from ..subgroups import (
    AdditiveSubgroup,
    FieldSpan,
    TaggedGenerator,
    bracket_subgroup,
    iter_subspace_bases,
    ring_window,
)


def context(spec):
    try:
        return CONTEXTS[spec]
    except KeyError:
        raise ContextError(f"unknown ring {spec!r}; known: {', '.join(sorted(CONTEXTS))}")


def units(ctx):
    return [Mat2.unit(ctx, i, j) for i in (1, 2) for j in (1, 2)]


def singleton(a):
    return AdditiveSubgroup.from_elements(a.ctx, [a])


def poly_full(ctx, mats):
    return AdditiveSubgroup.from_elements(ctx, mats, kind="poly-full")


def trace_zero_subgroup(ctx):
    """The additive group of trace-zero matrices (equal to [R, R] here)."""
    if ctx.is_finite:
        t = tables(ctx.spec)
        return AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in t.sl2_rows])
    if ctx is not M2_POLY2:
        raise ContextError(f"no trace-zero window fixture over {ctx.spec}")
    return poly_full(
        ctx, [Mat2.unit(ctx, 1, 2), Mat2.unit(ctx, 2, 1), Mat2.identity(ctx)]
    )


def central_subgroup(ctx):
    if ctx.is_finite:
        t = tables(ctx.spec)
        return AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in t.center_rows])
    return poly_full(ctx, [Mat2.identity(ctx)])


def example3_subgroup():
    """Scalar diagonal polynomials plus the two constant off-diagonal units."""
    ctx = M2_POLY2
    return AdditiveSubgroup(
        ctx,
        [
            TaggedGenerator(Mat2.identity(ctx), "poly-full"),
            TaggedGenerator(Mat2.unit(ctx, 1, 2)),
            TaggedGenerator(Mat2.unit(ctx, 2, 1)),
        ],
    )


def example4_lie_ideal():
    """The trace-zero group enlarged by the constant e11: a Lie ideal with full span."""
    ctx = M2_POLY2
    return AdditiveSubgroup(
        ctx,
        [
            TaggedGenerator(Mat2.unit(ctx, 1, 2), "poly-full"),
            TaggedGenerator(Mat2.unit(ctx, 2, 1), "poly-full"),
            TaggedGenerator(Mat2.identity(ctx), "poly-full"),
            TaggedGenerator(Mat2.unit(ctx, 1, 1)),
        ],
    )


def abelian_lie_ideal():
    """Polynomial multiples of w = t*e12 + e21 and of 1; w*w = t*1 is central."""
    ctx = M2_POLY2
    t = Poly.t()
    w = Mat2.unit(ctx, 1, 2).scale(t) + Mat2.unit(ctx, 2, 1)
    return poly_full(ctx, [w, Mat2.identity(ctx)])


def lie_ideal_catalog(ctx, n):
    """Named Lie ideals covering all classes available over the context."""
    if ctx.is_finite:
        t = tables(ctx.spec)
        out = [
            ("center", central_subgroup(ctx)),
            ("trace-zero", trace_zero_subgroup(ctx)),
            ("ring", ring_window(ctx)),
        ]
        cc = ctx.central_closure()
        e12 = Mat2.unit(ctx, 1, 2)
        span = FieldSpan.span(cc, [e12, Mat2.identity(cc)])
        # additive basis: scale the span basis through a GF(2)-basis of the field
        scalars = [ctx.domain.one()]
        if ctx.spec == "m2-gf4":
            scalars.append(ctx.domain.u())
        mats = [b.scale(s) for b in span.basis() for s in scalars]
        out.append(("abelian-e12", AdditiveSubgroup.from_elements(ctx, mats)))
        return out
    if ctx is not M2_POLY2:
        raise ContextError(f"no Lie ideal catalog over {ctx.spec}")
    return [
        ("center", central_subgroup(ctx)),
        ("abelian-w", abelian_lie_ideal()),
        ("trace-zero", trace_zero_subgroup(ctx)),
        ("trace-zero-plus-e11", example4_lie_ideal()),
        ("ring", ring_window(ctx)),
    ]


def fold_bracket(coeffs, base, n):
    """Window subgroup of [a1, ..., ak, B], brackets nested from the right."""
    s = base
    for a in reversed(list(coeffs)):
        s = bracket_subgroup(singleton(a), s, n)
    return s


def all_central_slice(sg, n):
    return all(is_central(b) for b in sg.slice(n).basis())


def random_matrix(ctx, rng, degree_bound=4):
    return sample_matrix(ctx, rng, degree_bound)


def random_noncentral(ctx, rng, degree_bound=4):
    while True:
        m = sample_matrix(ctx, rng, degree_bound)
        if not is_central(m):
            return m


def random_trace_zero(ctx, rng, degree_bound=4):
    # adding tr(x)*e22 cancels the trace in characteristic 2
    m = sample_matrix(ctx, rng, degree_bound)
    return m + Mat2.unit(ctx, 2, 2).scale(m.trace())


def random_traceful(ctx, rng, degree_bound=4):
    while True:
        m = sample_matrix(ctx, rng, degree_bound)
        if not m.trace().is_zero:
            return m


def span_bracket(a, b):
    """Field span of [A, B] from basis pairs; brackets are bilinear."""
    mats = [commutator(x, y) for x in a.basis() for y in b.basis()]
    return FieldSpan.span(a.ctx, mats)


def span_engel(l, m):
    """Field span of the degree-m left-normed Engel words on L."""
    e = l
    for _ in range(m - 1):
        e = span_bracket(l, e)
    return e


def gf2_kernel(columns, width):
    """Nullspace masks of a GF(2) linear map given by its basis-vector images.

    columns[i] is the image (as bits) of the i-th basis vector; a returned
    mask m satisfies xor of columns[i] over the set bits of m == 0.  The
    value rows are kept mutually reduced, so each augmented vector settles
    after at most one use of every pivot.
    """
    rows = []
    kernel = []
    mask_all = (1 << width) - 1
    for i, v in enumerate(columns):
        acc = v << width | 1 << i
        moved = True
        while moved and acc >> width:
            moved = False
            val = acc >> width
            for r in rows:
                pv = r >> width
                if val & (pv & -pv):
                    acc ^= r
                    moved = True
                    break
        if acc >> width:
            pb = (acc >> width) & -(acc >> width)
            rows = [r ^ acc if (r >> width) & pb else r for r in rows]
            rows.append(acc)
        else:
            kernel.append(acc & mask_all)
    return kernel


def kernel_of_linear_map(cc, images):
    """Kernel of a C-linear map on M2 given by its images on the four units.

    Gaussian elimination on the 4-unknown linear system; returns the kernel
    as a FieldSpan of matrices over the closure.  Each image may be a
    matrix or a flat tuple of scalars (stacked maps).
    """
    base = units(cc)
    flat = [m.e if isinstance(m, Mat2) else tuple(m) for m in images]
    eqs = []
    for cell in range(len(flat[0])):
        row = [col[cell] for col in flat]
        eqs.append(row)
    zero = cc.domain.zero()
    pivots = {}
    reduced = []
    for row in eqs:
        row = list(row)
        for col, owner in pivots.items():
            if not row[col].is_zero:
                f = row[col]
                row = [x - f * y for x, y in zip(row, reduced[owner])]
        lead = next((c for c in range(4) if not row[c].is_zero), None)
        if lead is None:
            continue
        inv = row[lead].inverse()
        row = [x * inv for x in row]
        for owner in range(len(reduced)):
            f = reduced[owner][lead]
            if not f.is_zero:
                reduced[owner] = [x - f * y for x, y in zip(reduced[owner], row)]
        pivots[lead] = len(reduced)
        reduced.append(row)
    free = [c for c in range(4) if c not in pivots]
    kernel = []
    one = cc.domain.one()
    for fc in free:
        coords = [zero] * 4
        coords[fc] = one
        for col, owner in pivots.items():
            coords[col] = -reduced[owner][fc]
        m = Mat2.zero(cc)
        for k, c in enumerate(coords):
            m = m + base[k].scale(c)
        kernel.append(m)
    return FieldSpan.span(cc, kernel)


@cache
def f3_subspaces():
    """All 212 GF(3)-subspaces of M2(GF(3)) as field spans."""
    ctx = M2_GF3
    base = units(ctx)
    spans = [FieldSpan.span(ctx, [])]
    for k in range(1, 5):
        for pivots in combinations(range(4), k):
            pivset = set(pivots)
            free = [[c for c in range(p + 1, 4) if c not in pivset] for p in pivots]
            slots = [(i, c) for i, f in enumerate(free) for c in f]
            for vals in product((0, 1, 2), repeat=len(slots)):
                rows = []
                for i, p in enumerate(pivots):
                    m = base[p]
                    for (ri, c), v in zip(slots, vals):
                        if ri == i and v:
                            m = m + base[c].scale(F3(v))
                    rows.append(m)
                spans.append(FieldSpan.span(ctx, rows))
    return tuple(spans)


@cache
def f3_lie_ideals():
    return tuple(sp for sp in f3_subspaces() if sp.is_lie_ideal())


@cache
def gf2_lie_subgroup_rows():
    """Row tuples of every additive subgroup of M2(GF(2)) invariant under brackets."""
    t = tables("m2-gf2")
    basis = t.basis_codes()
    out = []
    for rows in iter_subspace_bases(t.dim):
        if all(reduce_low(rows, t.comm(r, b)) == 0 for r in rows for b in basis):
            out.append(rows)
    return tuple(out)


def noncentral_rows(t, rows):
    return any(not t.is_central_code(r) for r in rows)
