"""Checkers for commutator membership criteria and annihilator identities."""

from __future__ import annotations

from ..errors import ContextError
from ..finite_tables import tables
from ..gf2linalg import reduce_low, rref_low
from ..matrices import (
    M2_POLY2,
    M2_TPOLY2,
    Mat2,
    all_matrices,
    commutator,
    in_commutator_space,
    is_central,
    square_central,
)
from ..scalars import Poly
from ..subgroups import (
    AdditiveSubgroup,
    FieldSpan,
    TaggedGenerator,
    bracket_subgroup,
    generated_ideal,
    ideal_window,
    iter_subspace_bases,
    ring_window,
    subring_closure,
)
from ..verdicts import MODE_EXHAUSTIVE, MODE_RANDOM, MODE_WINDOW, Recorder
from .common import (
    context,
    f3_lie_ideals,
    gf2_kernel,
    gf2_lie_subgroup_rows,
    kernel_of_linear_map,
    lie_ideal_catalog,
    random_matrix,
    random_noncentral,
    span_bracket,
    trace_zero_subgroup,
    units,
)


def _line_span_rows(t, b):
    """GF(2) rows of C*b + C inside the code space."""
    vecs = [t.matmul(sc, b) for sc in t.scalar_codes[1:]]
    vecs += list(t.scalar_codes[1:])
    return rref_low(vecs)


def check_lem2(cfg):
    """The annihilator of [b, R] under outer brackets is contained in C*b + C."""
    ctx = context(cfg.ring)
    if ctx.is_finite:
        if ctx.char != 2:
            raise ContextError("this annihilator scan needs characteristic 2")
        t = tables(cfg.ring)
        rec = Recorder("lem2", MODE_EXHAUSTIVE, cfg)
        basis = t.basis_codes()
        dim = t.dim
        for b in range(t.n):
            if t.is_central_code(b):
                continue
            cs = [t.comm(b, u) for u in basis]
            columns = []
            for i, a in enumerate(basis):
                col = 0
                for k, c in enumerate(cs):
                    col |= t.comm(a, c) << (k * dim)
                columns.append(col)
            kernel = gf2_kernel(columns, dim)
            line = _line_span_rows(t, b)
            bad = [m for m in kernel if reduce_low(line, m) != 0]
            rec.case(
                not bad,
                counterexample=f"b code {b}: annihilator code {bad[0] if bad else 0} escapes C*b+C",
            )
        return rec.verdict()
    cc = ctx.central_closure()
    rec = Recorder("lem2", MODE_RANDOM, cfg)
    base = units(cc)
    for i in range(cfg.samples):
        rng = cfg.rng("lem2", i)
        b = random_noncentral(cc, rng, degree_bound=3)
        cs = [commutator(b, u) for u in base]
        images = []
        for u in base:
            flat = []
            for c in cs:
                flat.extend(commutator(u, c).e)
            images.append(tuple(flat))
        kernel = kernel_of_linear_map(cc, images)
        line = FieldSpan.span(cc, [b, Mat2.identity(cc)])
        bad = [m for m in kernel.basis() if not line.contains(m)]
        rec.case(
            not bad,
            counterexample=f"b = {b}: annihilator element {bad[0] if bad else None} escapes C*b+C",
        )
    return rec.verdict()


def check_lem6(cfg):
    """Commutator-space membership, trace zero, and central square all agree."""
    ctx = context(cfg.ring)
    if ctx.is_finite and ctx.char != 2:
        raise ContextError("the three-way equivalence is a characteristic-2 statement")
    if ctx.is_finite:
        rec = Recorder("lem6", MODE_EXHAUSTIVE, cfg)
        pool = all_matrices(ctx)
    else:
        rec = Recorder("lem6", MODE_RANDOM, cfg)
        pool = (
            random_matrix(ctx, cfg.rng("lem6", i), degree_bound=4)
            for i in range(cfg.samples)
        )
    for m in pool:
        by_span = in_commutator_space(m)
        by_trace = m.trace().is_zero
        by_square = square_central(m)
        rec.case(
            by_span == by_trace == by_square,
            counterexample=f"{m}: span={by_span} trace={by_trace} square={by_square}",
        )
    return rec.verdict()


def _lem8_finite(cfg, ctx):
    t = tables(cfg.ring)
    rec = Recorder("lem8", MODE_EXHAUSTIVE, cfg)
    basis = t.basis_codes()
    sl2 = t.sl2_rows
    # (i) and (ii): noncentral elements are moved out of the center by
    # second commutators and by plain commutators
    for a in range(t.n):
        if t.is_central_code(a):
            continue
        rec.case(
            any(t.comm(a, s) for s in sl2),
            counterexample=f"code {a} kills [[R,R] part (i)",
        )
        rec.case(
            any(not t.is_central_code(t.comm(a, u)) for u in basis),
            counterexample=f"code {a} brackets into the center, part (ii)",
        )
    # (iii): [R, A] = [R, subring generated by A]
    if cfg.ring == "m2-gf2":
        subgroups = iter_subspace_bases(t.dim)
    else:
        def _random_rows():
            for i in range(min(cfg.samples, 200)):
                rng = cfg.rng("lem8-iii", i)
                vecs = [rng.randrange(1, t.n) for _ in range(rng.randrange(1, 4))]
                yield tuple(rref_low(vecs))
        subgroups = _random_rows()
        rec.mode = MODE_RANDOM
    for rows in subgroups:
        closure = list(rows)
        while True:
            grew = False
            for x in list(closure):
                for y in list(closure):
                    p = t.matmul(x, y)
                    if reduce_low(closure, p):
                        closure = list(rref_low(list(closure) + [p]))
                        grew = True
            if not grew:
                break
        lhs = rref_low([t.comm(u, a) for u in basis for a in rows])
        rhs = rref_low([t.comm(u, a) for u in basis for a in closure])
        rec.case(
            lhs == rhs,
            counterexample=f"rows {rows}: [R,A] differs from [R,<A>]",
        )
    # (iv): for a Lie ideal, the ideal generated by [L,L] sits in L + L*L
    # and brackets back into L
    if cfg.ring == "m2-gf2":
        lie_rows = gf2_lie_subgroup_rows()
    else:
        abelian = _line_span_rows(t, 1 << t.width)  # C*e12 + C
        lie_rows = [t.sl2_rows, tuple(basis), abelian, t.center_rows]
    for rows in lie_rows:
        brackets = [t.comm(x, y) for x in rows for y in rows]
        if not any(brackets):
            rec.ok()
            continue
        prods = rref_low(list(rows) + [t.matmul(x, y) for x in rows for y in rows])
        full_inside = all(reduce_low(prods, u) == 0 for u in basis)
        tz_inside = all(reduce_low(list(rows), s) == 0 for s in sl2)
        rec.case(
            full_inside and tz_inside,
            counterexample=f"Lie ideal rows {rows}: ideal of [L,L] escapes L+L*L or [I,R] escapes L",
        )
    return rec.verdict()


def _lem8_gf3(cfg):
    rec = Recorder("lem8", MODE_EXHAUSTIVE, cfg)
    ideals = f3_lie_ideals()
    for k in ideals:
        k_central = all(is_central(b) for b in k.basis())
        for l in ideals:
            br = span_bracket(k, l)
            if not all(is_central(b) for b in br.basis()):
                rec.ok()
                continue
            l_central = all(is_central(b) for b in l.basis())
            rec.case(
                k_central or l_central,
                counterexample=f"noncentral Lie ideals dims {k.dim},{l.dim} bracket into the center",
            )
    return rec.verdict()


def _lem8_poly(cfg, ctx):
    rec = Recorder("lem8", MODE_RANDOM, cfg)
    n = cfg.degree
    ring = ring_window(ctx)
    ideals = []
    for label, ideal in (("full", ring), ("t^2", ideal_window(ctx, Poly.parse("t^2")))):
        ideals.append((label, bracket_subgroup(ideal, ideal, n).slice(n).basis()))
    quota = max(4, min(cfg.samples, 64) // 4)
    for idx in range(quota):
        rng = cfg.rng("lem8-i", idx)
        a = random_noncentral(ctx, rng, degree_bound=3)
        for label, comm2_basis in ideals:
            moved = any(not commutator(a, c).is_zero for c in comm2_basis)
            rec.case(moved, counterexample=f"(i) I={label}: {a} kills [I,I]")
        moved_out = any(
            not is_central(commutator(a, b)) for b in ring.slice(n).basis()
        )
        rec.case(moved_out, counterexample=f"(ii) {a} brackets R into the center")
    for idx in range(quota):
        rng = cfg.rng("lem8-iii", idx)
        gens = [random_matrix(ctx, rng, degree_bound=2) for _ in range(rng.randrange(1, 3))]
        a = AdditiveSubgroup.from_elements(ctx, gens)
        lhs = bracket_subgroup(ring, a, n).slice(n)
        rhs = bracket_subgroup(ring, subring_closure(a, n), n).slice(n)
        rec.case(
            lhs.rows == rhs.rows,
            counterexample=f"(iii) gens {[str(g) for g in gens]}: [R,A] != [R,<A>]",
        )
    for name, l in lie_ideal_catalog(ctx, n):
        m, g = generated_ideal(l, n)
        if g.is_zero:
            rec.ok(witness=f"(iv) {name}: [L,L] = 0")
            continue
        prods = [
            TaggedGenerator(x * y, "poly-full")
            for x in l.slice(n).basis()
            for y in l.slice(n).basis()
            if not (x * y).is_zero
        ]
        l_plus_sq = AdditiveSubgroup(ctx, tuple(l.generators) + tuple(prods))
        ok_sum = l_plus_sq.slice(n).contains_slice(m.slice(n))
        ok_back = l.slice(n).contains_slice(bracket_subgroup(m, ring, n).slice(n))
        rec.case(
            ok_sum and ok_back,
            witness=f"(iv) {name}: ideal generator ({g})",
            counterexample=f"(iv) {name}: ideal of [L,L] misbehaves",
        )
    return rec.verdict()


def check_lem8(cfg):
    """Annihilator facts, subring brackets, and the ideal generated by [L,L]."""
    ctx = context(cfg.ring)
    if ctx.spec == "m2-gf3":
        return _lem8_gf3(cfg)
    if ctx.is_finite:
        return _lem8_finite(cfg, ctx)
    if ctx is not M2_POLY2:
        raise ContextError("no window variant of this check over " + ctx.spec)
    return _lem8_poly(cfg, ctx)


def _ideal_trace_zero(ctx, g):
    mats = [Mat2.unit(ctx, 1, 2), Mat2.unit(ctx, 2, 1), Mat2.identity(ctx)]
    return AdditiveSubgroup.from_elements(ctx, mats, kind="poly-ideal", ideal_gen=g)


def check_lem10(cfg):
    """[I, J] contains the Lie ideal [IJ, R] whenever the product is nonzero."""
    ctx = context(cfg.ring)
    if ctx is not M2_POLY2:
        raise ContextError("the principal-ideal computation runs over m2-poly2")
    rec = Recorder("lem10", MODE_RANDOM, cfg)
    n = cfg.degree
    pairs = [("1", "1"), ("1", "t"), ("t", "t"), ("t", "t^2+t+1"), ("t^2", "t+1")]
    for i in range(min(cfg.samples, 6)):
        rng = cfg.rng("lem10", i)
        f = Poly(rng.randrange(1, 8))
        g = Poly(rng.randrange(1, 8))
        pairs.append((str(f), str(g)))
    for ftext, gtext in pairs:
        f, g = Poly.parse(ftext), Poly.parse(gtext)
        got = bracket_subgroup(ideal_window(ctx, f), ideal_window(ctx, g), n)
        want = _ideal_trace_zero(ctx, f * g)
        rec.case(
            got.slice(n).contains_slice(want.slice(n)),
            witness=f"[I({ftext}), I({gtext})] contains ({ftext})({gtext})*[R,R]",
            counterexample=f"[I({ftext}), I({gtext})] misses ({ftext})({gtext})*[R,R]",
        )
    return rec.verdict()


def check_lem11(cfg):
    """A noncentral element brackets the ring into a span of dimension at least 2."""
    ctx = context(cfg.ring)
    cc = ctx.central_closure()
    base = units(cc)
    if ctx.is_finite:
        if ctx.char != 2:
            raise ContextError("stated for the characteristic-2 rings")
        rec = Recorder("lem11", MODE_EXHAUSTIVE, cfg)
        pool = [m for m in all_matrices(ctx) if not is_central(m)]
    else:
        rec = Recorder("lem11", MODE_RANDOM, cfg)
        pool = [
            random_noncentral(ctx, cfg.rng("lem11", i), degree_bound=4)
            for i in range(cfg.samples)
        ]
        pool.append(Mat2.unit(ctx, 1, 2))
    for a in pool:
        sp = FieldSpan.span(cc, [commutator(a, u) for u in base])
        rec.case(sp.dim >= 2, counterexample=f"{a}: bracket span dim {sp.dim}")
    return rec.verdict()


def check_lem20(cfg):
    """Second commutators land in the center exactly in the exceptional cases."""
    ctx = context(cfg.ring)
    if ctx.spec == "m2-gf3":
        from ..scalars import F3

        rec = Recorder("lem20", MODE_EXHAUSTIVE, cfg)
        # trace zero over GF(3) means e22 = -e11
        b = [
            Mat2.unit(ctx, 1, 1) + Mat2.unit(ctx, 2, 2).scale(F3(2)),
            Mat2.unit(ctx, 1, 2),
            Mat2.unit(ctx, 2, 1),
        ]
        elems = [
            b[0].scale(F3(c0)) + b[1].scale(F3(c1)) + b[2].scale(F3(c2))
            for c0 in range(3)
            for c1 in range(3)
            for c2 in range(3)
        ]
        noncentral = 0
        for x in elems:
            for y in elems:
                if not is_central(commutator(x, y)):
                    noncentral += 1
        rec.bulk(len(elems) ** 2)
        if noncentral == 0:
            rec.fail("every second commutator over GF(3) is central")
        else:
            rec.witnesses.append(
                f"{noncentral} noncentral second commutators among {len(elems) ** 2} pairs"
            )
        return rec.verdict()
    if ctx.is_finite:
        t = tables(cfg.ring)
        rec = Recorder("lem20", MODE_EXHAUSTIVE, cfg)
        some_nonzero = False
        for x in t.comm_span_rows:
            for y in t.comm_span_rows:
                c = t.comm(x, y)
                some_nonzero = some_nonzero or c != 0
                rec.case(
                    t.is_central_code(c),
                    counterexample=f"[[R,R],[R,R]] element code {c} is not central",
                )
        rec.case(some_nonzero, counterexample="[[R,R],[R,R]] vanished entirely")
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("no window variant over " + ctx.spec)
    rec = Recorder("lem20", MODE_WINDOW, cfg)
    n = cfg.degree
    rr = trace_zero_subgroup(ctx)
    brr = bracket_subgroup(rr, rr, n)
    sl = brr.slice(n)
    rec.case(not sl.is_zero, counterexample="[[R,R],[R,R]] vanished in the window")
    for b in sl.basis():
        rec.case(is_central(b), counterexample=f"noncentral second commutator {b}")
    return rec.verdict()


def check_thm24(cfg):
    """The subring generated by the commutators is the whole simple ring."""
    ctx = context(cfg.ring)
    if ctx.is_finite:
        if ctx.char == 3:
            raise ContextError("kept to the characteristic-2 rings")
        t = tables(cfg.ring)
        rec = Recorder("thm24", MODE_EXHAUSTIVE, cfg)
        closure = subring_closure(trace_zero_subgroup(ctx), 1)
        sl = closure.slice(1)
        count = 1 << sl.dim
        rec.case(
            sl.dim == t.dim,
            witness=f"closure has {count} elements",
            counterexample=f"closure has {count} of {t.n} elements",
        )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("no window variant over " + ctx.spec)
    rec = Recorder("thm24", MODE_WINDOW, cfg)
    n = cfg.degree
    closure = subring_closure(trace_zero_subgroup(ctx), n)
    rec.case(
        closure.slice(n).rows == ring_window(ctx).slice(n).rows,
        witness="closure fills the whole window",
        counterexample="closure window differs from the ring window",
    )
    return rec.verdict()


def check_ex2(cfg):
    """Square-zero witness in the closure commutator space but outside [R, R]."""
    ctx = context(cfg.ring)
    if ctx is not M2_TPOLY2:
        raise ContextError("this example lives over m2-tpoly2")
    rec = Recorder("ex2", MODE_WINDOW, cfg)
    t = Poly.t()
    a = Mat2(ctx, (t, t, t, t))
    rec.case((a * a).is_zero, counterexample=f"a*a = {a * a}")
    rec.case(
        in_commutator_space(a),
        counterexample="a is not in the closure commutator space",
    )
    rec.case(a.trace().is_zero, counterexample="a has nonzero trace")
    n = cfg.degree
    rr = bracket_subgroup(ring_window(ctx), ring_window(ctx), n)
    sl = rr.slice(n)
    rec.case(
        not sl.contains(a),
        counterexample="a landed inside the commutator group window",
    )
    for b in sl.basis():
        rec.case(
            all(e.bits & 3 == 0 for e in b.e),
            counterexample=f"[R,R] window element {b} has a degree<2 entry",
        )
    inside = commutator(Mat2.unit(M2_POLY2, 1, 1).scale(t), Mat2.unit(M2_POLY2, 1, 2).scale(t))
    rec.case(
        sl.contains(Mat2(ctx, inside.e)),
        counterexample="t^2-scaled commutator missing from the window",
    )
    return rec.verdict()
