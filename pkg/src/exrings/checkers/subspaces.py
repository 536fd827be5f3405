"""Checkers for invariant additive subgroups of the 2x2 rings.

The finite contexts are scanned subgroup by subgroup (every additive
subgroup of M2 over GF(2) or GF(4) is a GF(2)-subspace of the code
space), so those verdicts are exhaustive.  The polynomial context is
handled by closing seed sets under the bracket inside a degree window.
"""

from __future__ import annotations

from ..errors import ContextError
from ..finite_tables import tables
from ..gf2linalg import reduce_low
from ..matrices import M2_POLY2, Mat2, is_central
from ..scalars import Poly
from ..subgroups import AdditiveSubgroup, FieldSpan, bracket_closure, c_span, iter_subspace_bases, ring_window
from ..verdicts import MODE_EXHAUSTIVE, MODE_RANDOM, MODE_WINDOW, Recorder
from .common import (
    central_subgroup,
    context,
    example3_subgroup,
    example4_lie_ideal,
    gf2_lie_subgroup_rows,
    random_matrix,
    trace_zero_subgroup,
)

_IDEAL_GENS = ("1", "t", "t^2+t+1")


def _span_is_line_plus_center(sp):
    """AC = C*a + C with a noncentral and a*a central."""
    cc = sp.ctx
    if sp.dim != 2 or not sp.contains(Mat2.identity(cc)):
        return False
    a = next(b for b in sp.basis() if not is_central(b))
    if sp != FieldSpan.span(cc, [a, Mat2.identity(cc)]):
        return False
    return is_central(a * a)


def _span_contains_trace_zero(sp):
    cc = sp.ctx
    tz = FieldSpan.trace_zero(cc)
    return all(sp.contains(b) for b in tz.basis())


def check_thm16(cfg):
    """Simple ring: noncentral A is bracket-invariant iff Z <= A <= [R,R] or [R,R] <= A."""
    ctx = context(cfg.ring)
    if not ctx.is_finite or ctx.char != 2:
        raise ContextError("this scan needs a finite characteristic-2 ring")
    t = tables(cfg.ring)
    rec = Recorder("thm16", MODE_EXHAUSTIVE, cfg)
    n, mul = t.n, t.mul
    sl2 = list(t.sl2_rows)
    center = list(t.center_rows)
    cmask = t.center_mask
    total = failed = invariant = 0
    for rows in iter_subspace_bases(t.dim):
        total += 1
        if all(cmask >> r & 1 for r in rows):
            continue
        lhs = True
        for a in rows:
            an = a * n
            for s in sl2:
                v = mul[an + s] ^ mul[s * n + a]
                for r in rows:
                    if v & (r & -r):
                        v ^= r
                if v:
                    lhs = False
                    break
            if not lhs:
                break
        z_in_a = all(reduce_low(rows, c) == 0 for c in center)
        a_in_tz = all(reduce_low(sl2, r) == 0 for r in rows)
        tz_in_a = all(reduce_low(rows, s) == 0 for s in sl2)
        rhs = (z_in_a and a_in_tz) or tz_in_a
        if lhs:
            invariant += 1
        if lhs != rhs:
            failed += 1
            if len(rec.counterexamples) < 8:
                rec.counterexamples.append(
                    f"subgroup rows {rows}: invariance={lhs} membership={rhs}"
                )
    rec.bulk(total, failed)
    rec.witnesses.append(f"{invariant} noncentral invariant subgroups out of {total}")
    return rec.verdict()


def _scaled_center_generator(sg, n):
    """Some beta whose full multiple ladder beta*t^j sits in the window, or None.

    The scalar diagonals inside the window are scanned outright (the basis
    rows of a reduced slice can hide central combinations), then every
    member is tried as a ladder start.
    """
    one = Mat2.identity(sg.ctx)
    sl = sg.slice(n)
    t = Poly.t()
    members = [
        Poly(bits)
        for bits in range(1, 1 << n)
        if sl.contains(one.scale(Poly(bits)))
    ]
    members.sort(key=lambda p: (p.degree, p.bits))
    for beta in members:
        cur = beta * t
        good = True
        while cur.degree < n:
            if not sl.contains(one.scale(cur)):
                good = False
                break
            cur = cur * t
        if good:
            return beta
    return None


def check_thm19(cfg):
    """Nonabelian L, noncentral A with [A,L] <= A: A absorbs beta*Z and its span is a line plus center or contains the trace-zero space."""
    ctx = context(cfg.ring)
    if ctx.spec == "m2-gf2":
        t = tables("m2-gf2")
        rec = Recorder("thm19", MODE_EXHAUSTIVE, cfg)
        ideals = {"trace-zero": t.sl2_rows, "ring": tuple(t.basis_codes())}
        for lname, lrows in ideals.items():
            rref = list(lrows)
            for rows in iter_subspace_bases(t.dim):
                if all(t.center_mask >> r & 1 for r in rows):
                    rec.ok()
                    continue
                invariant = all(
                    reduce_low(rows, t.comm(a, s)) == 0 for a in rows for s in rref
                )
                if not invariant:
                    rec.ok()
                    continue
                sp = FieldSpan.span(ctx, [t.mat_of(r) for r in rows])
                scaled_center = reduce_low(rows, t.identity_code) == 0
                good = scaled_center and (
                    _span_is_line_plus_center(sp) or _span_contains_trace_zero(sp)
                )
                rec.case(
                    good,
                    witness=f"L={lname} A rows {rows}",
                    counterexample=f"L={lname} A rows {rows}",
                )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-gf2 or m2-poly2")
    rec = Recorder("thm19", MODE_RANDOM, cfg)
    n = cfg.degree
    t = Poly.t()
    e11 = Mat2.unit(ctx, 1, 1)
    e12 = Mat2.unit(ctx, 1, 2)
    seed_sets = [
        [e11],
        [e12],
        [e11.scale(t)],
        [e11 + e12.scale(t)],
        [e11.scale(t * t + t), e12],
    ]
    for i in range(min(cfg.samples, 8)):
        rng = cfg.rng("thm19", i)
        seed_sets.append([random_matrix(ctx, rng, degree_bound=2)])
    ideals = [
        ("trace-zero", trace_zero_subgroup(ctx)),
        ("trace-zero-plus-e11", example4_lie_ideal()),
        ("ring", ring_window(ctx)),
    ]
    for lname, l in ideals:
        for seeds in seed_sets:
            label = f"L={lname} seeds={[str(s) for s in seeds]}"
            a = bracket_closure(seeds, l, n)
            sl = a.slice(n)
            if all(is_central(b) for b in sl.basis()):
                rec.ok()
                continue
            beta = _scaled_center_generator(a, n)
            if beta is None:
                rec.fail(f"{label}: no scaled center inside")
                continue
            sp = c_span(a)
            good = _span_is_line_plus_center(sp) or _span_contains_trace_zero(sp)
            rec.case(good, witness=f"{label}: beta={beta}", counterexample=label)
    return rec.verdict()


def _ideal_bracket_subgroup(ctx, g):
    """The additive group g*[R,R]: trace-zero matrices over the ideal (g)."""
    mats = [Mat2.unit(ctx, 1, 2), Mat2.unit(ctx, 2, 1), Mat2.identity(ctx)]
    return AdditiveSubgroup.from_elements(ctx, mats, kind="poly-ideal", ideal_gen=g)


def check_thm23(cfg):
    """[A,I] <= A for an ideal I: A contains a proper Lie ideal or spans a line plus center."""
    ctx = context(cfg.ring)
    if ctx.spec == "m2-gf2":
        t = tables("m2-gf2")
        rec = Recorder("thm23", MODE_EXHAUSTIVE, cfg)
        lie_rows = set(gf2_lie_subgroup_rows())
        for rows in iter_subspace_bases(t.dim):
            if all(t.center_mask >> r & 1 for r in rows) or rows not in lie_rows:
                rec.ok()
                continue
            sp = FieldSpan.span(ctx, [t.mat_of(r) for r in rows])
            tz_in_a = all(reduce_low(rows, s) == 0 for s in t.sl2_rows)
            rec.case(
                tz_in_a or _span_is_line_plus_center(sp),
                witness=f"A rows {rows}",
                counterexample=f"A rows {rows}",
            )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-gf2 or m2-poly2")
    rec = Recorder("thm23", MODE_RANDOM, cfg)
    n = cfg.degree
    t = Poly.t()
    e11 = Mat2.unit(ctx, 1, 1)
    e12 = Mat2.unit(ctx, 1, 2)
    e21 = Mat2.unit(ctx, 2, 1)
    seed_sets = [
        [e11],
        [e12],
        [e12 + e21.scale(t)],
        [e11.scale(t * t)],
    ]
    for i in range(min(cfg.samples, 8)):
        rng = cfg.rng("thm23", i)
        seed_sets.append([random_matrix(ctx, rng, degree_bound=2)])
    from ..subgroups import ideal_window

    for gtext in _IDEAL_GENS:
        g = Poly.parse(gtext)
        ideal = ideal_window(ctx, g)
        for seeds in seed_sets:
            label = f"I=({gtext}) seeds={[str(s) for s in seeds]}"
            a = bracket_closure(seeds, ideal, n)
            sl = a.slice(n)
            if all(is_central(b) for b in sl.basis()):
                rec.ok()
                continue
            if _span_is_line_plus_center(c_span(a)):
                rec.ok(witness=f"{label}: line plus center")
                continue
            found = None
            for bits in range(1, 1 << max(2, n - 1)):
                cand = Poly(bits)
                inner = _ideal_bracket_subgroup(ctx, cand)
                if sl.contains_slice(inner.slice(n)):
                    found = cand
                    break
            rec.case(
                found is not None,
                witness=f"{label}: contains ({found})*[R,R]" if found else None,
                counterexample=f"{label}: no proper Lie ideal inside",
            )
    return rec.verdict()


def check_lem5(cfg):
    """Noncentral subring with [A,I] <= A contains a nonzero ideal or spans a line plus center."""
    ctx = context(cfg.ring)
    if ctx.spec != "m2-gf2":
        raise ContextError("this scan is exhaustive over m2-gf2 only")
    t = tables("m2-gf2")
    rec = Recorder("lem5", MODE_EXHAUSTIVE, cfg)
    basis = t.basis_codes()
    for rows in iter_subspace_bases(t.dim):
        central = all(t.center_mask >> r & 1 for r in rows)
        closed = all(
            reduce_low(rows, t.matmul(x, y)) == 0 for x in rows for y in rows
        )
        invariant = all(
            reduce_low(rows, t.comm(a, b)) == 0 for a in rows for b in basis
        )
        if central or not closed or not invariant:
            rec.ok()
            continue
        # the only nonzero ideal of a simple ring is the ring itself
        contains_ideal = len(rows) == t.dim
        sp = FieldSpan.span(ctx, [t.mat_of(r) for r in rows])
        rec.case(
            contains_ideal or _span_is_line_plus_center(sp),
            witness=f"subring rows {rows}",
            counterexample=f"subring rows {rows}",
        )
    return rec.verdict()


def check_ex3(cfg):
    """Window snapshots of the diagonal-plus-constants subgroup match the closed form."""
    ctx = context(cfg.ring)
    if ctx is not M2_POLY2:
        raise ContextError("this example lives over m2-poly2")
    rec = Recorder("ex3", MODE_WINDOW, cfg)
    a = example3_subgroup()
    for n in (cfg.degree, 2 * cfg.degree):
        expected = sorted(
            [(1 << j) | (1 << (3 * n + j)) for j in range(n)]
            + [1 << n, 1 << (2 * n)]
        )
        got = sorted(a.slice(n).rows)
        rec.case(
            got == expected,
            witness=f"window {n}: {len(got)} rows as expected",
            counterexample=f"window {n}: rows {got[:6]}... differ from closed form",
        )
    sp = c_span(a)
    rec.case(
        sp.dim == 3 and sp == FieldSpan.trace_zero(sp.ctx),
        witness="closure span is the full trace-zero space",
        counterexample=f"closure span dim {sp.dim}",
    )
    from ..subgroups import bracket_subgroup

    n = cfg.degree
    rr = bracket_subgroup(ring_window(ctx), ring_window(ctx), n)
    br = bracket_subgroup(a, rr, n)
    center = central_subgroup(ctx)
    rec.case(
        br.slice(n).rows == center.slice(n).rows
        and a.slice(n).contains_slice(br.slice(n)),
        witness="[A,[R,R]] is exactly the scalar diagonal part and sits inside A",
        counterexample="[A,[R,R]] window mismatch",
    )
    for bits in range(1, 1 << max(2, cfg.degree - 3)):
        g = Poly(bits)
        inner = _ideal_bracket_subgroup(ctx, g)
        rec.case(
            not a.slice(n).contains_slice(inner.slice(n)),
            counterexample=f"A contains ({g})*[R,R]",
        )
    return rec.verdict()
