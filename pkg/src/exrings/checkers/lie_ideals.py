"""Checkers for the Lie ideal classification and Engel-word collapse."""

from __future__ import annotations

from ..errors import ContextError
from ..finite_tables import tables
from ..gf2linalg import reduce_low
from ..matrices import M2_POLY2, Mat2, commutator, is_central
from ..scalars import Poly
from ..subgroups import (
    AdditiveSubgroup,
    FieldSpan,
    LieIdealClass,
    bracket_subgroup,
    c_span,
    classify_lie_ideal,
    engel_subgroup,
    generated_ideal,
    ideal_window,
    ring_window,
)
from ..verdicts import MODE_EXHAUSTIVE, MODE_RANDOM, MODE_WINDOW, Recorder
from .common import (
    all_central_slice,
    central_subgroup,
    context,
    example4_lie_ideal,
    f3_lie_ideals,
    fold_bracket,
    gf2_lie_subgroup_rows,
    lie_ideal_catalog,
    random_matrix,
    random_trace_zero,
    span_bracket,
    span_engel,
    trace_zero_subgroup,
    units,
)

_ENGEL_PAIRS = ((1, 2), (2, 1), (2, 2), (3, 2), (2, 3))


def _noncentral_lie_catalog(ctx, n):
    return [
        (name, l)
        for name, l in lie_ideal_catalog(ctx, n)
        if not all_central_slice(l, n)
    ]


def _slice_trace_zero(l, n):
    return all(b.trace().is_zero for b in l.slice(n).basis())


def check_lem19(cfg):
    """Abelian Lie ideals span a line plus center via any member; nonabelian ones span the commutator space or everything and absorb an ideal bracket."""
    ctx = context(cfg.ring)
    n = cfg.degree
    if ctx.spec == "m2-gf2":
        rec = Recorder("lem19", MODE_EXHAUSTIVE, cfg)
        t = tables("m2-gf2")
        base = units(ctx)
        for rows in gf2_lie_subgroup_rows():
            l = AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in rows])
            if not rows or all(t.is_central_code(r) for r in rows):
                rec.ok()
                continue
            cls = classify_lie_ideal(l, n)
            sp = c_span(l)
            if cls is LieIdealClass.ABELIAN_NONCENTRAL:
                combos = []
                for mask in range(1, 1 << len(rows)):
                    code = 0
                    for i, r in enumerate(rows):
                        if mask >> i & 1:
                            code ^= r
                    combos.append(t.mat_of(code))
                good = True
                for a in combos:
                    if is_central(a):
                        continue
                    br = FieldSpan.span(ctx, [commutator(a, u) for u in base])
                    expect = FieldSpan.span(ctx, [a, Mat2.identity(ctx)])
                    good = good and br == sp == expect
                rec.case(good, counterexample=f"abelian rows {rows}: span mismatch")
            else:
                shape_ok = sp == FieldSpan.trace_zero(ctx) or sp.dim == 4
                absorbed = all(reduce_low(list(rows), s) == 0 for s in t.sl2_rows)
                rec.case(
                    shape_ok and absorbed,
                    counterexample=f"nonabelian rows {rows}: span dim {sp.dim}",
                )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-gf2 or m2-poly2")
    rec = Recorder("lem19", MODE_RANDOM, cfg)
    cc = ctx.central_closure()
    base = units(cc)
    ring = ring_window(ctx)
    for name, l in _noncentral_lie_catalog(ctx, n):
        cls = classify_lie_ideal(l, n)
        sp = c_span(l)
        if cls is LieIdealClass.ABELIAN_NONCENTRAL:
            members = [b for b in l.slice(n).basis() if not is_central(b)]
            for i in range(min(cfg.samples, 12)):
                rng = cfg.rng("lem19", i)
                picks = rng.sample(l.slice(n).basis(), 2)
                m = picks[0] + picks[1]
                if not is_central(m) and not m.is_zero:
                    members.append(m)
            good = True
            for a in members:
                br = FieldSpan.span(cc, [commutator(a, u) for u in base])
                expect = FieldSpan.span(cc, [a, Mat2.identity(cc)])
                good = good and br == sp == expect
            rec.case(good, witness=f"{name}: line plus center from every member",
                     counterexample=f"{name}: span mismatch")
        else:
            shape_ok = sp == FieldSpan.trace_zero(cc) or sp.dim == 4
            m, g = generated_ideal(l, n)
            absorbed = l.slice(n).contains_slice(
                bracket_subgroup(m, ring, n).slice(n)
            )
            rec.case(
                shape_ok and not g.is_zero and absorbed,
                witness=f"{name}: ideal generator ({g})",
                counterexample=f"{name}: span dim {sp.dim} or ideal bracket escaped",
            )
    return rec.verdict()


def check_lem21(cfg):
    """Engel words collapse into the center exactly for commutator-space Lie ideals at depth above one."""
    ctx = context(cfg.ring)
    n = cfg.degree
    if ctx.spec == "m2-gf3":
        rec = Recorder("lem21", MODE_EXHAUSTIVE, cfg)
        for sp in f3_lie_ideals():
            if all(is_central(b) for b in sp.basis()):
                continue
            for m in (2, 3):
                e = span_engel(sp, m)
                rec.case(
                    not all(is_central(b) for b in e.basis()),
                    counterexample=f"dim {sp.dim} Lie ideal: depth-{m} words centralize over GF(3)",
                )
        return rec.verdict()
    if ctx.is_finite:
        rec = Recorder("lem21", MODE_EXHAUSTIVE, cfg)
        t = tables(cfg.ring)
        catalog = [
            AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in rows])
            for rows in (gf2_lie_subgroup_rows() if cfg.ring == "m2-gf2" else ())
        ]
        if cfg.ring == "m2-gf4":
            catalog = [l for _, l in lie_ideal_catalog(ctx, n)]
        for l in catalog:
            sl = l.slice(n)
            if sl.is_zero or all(is_central(b) for b in sl.basis()):
                continue
            inside = all(reduce_low(list(t.sl2_rows), r) == 0 for r in sl.rows)
            for m in (1, 2, 3, 4):
                lhs = all_central_slice(engel_subgroup(l, m, n), n)
                rhs = m > 1 and inside
                rec.case(
                    lhs == rhs,
                    counterexample=f"rows {sl.rows} depth {m}: central={lhs} expected={rhs}",
                )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("no window variant over " + ctx.spec)
    rec = Recorder("lem21", MODE_WINDOW, cfg)
    for name, l in _noncentral_lie_catalog(ctx, n):
        inside = _slice_trace_zero(l, n)
        for m in (1, 2, 3, 4):
            lhs = all_central_slice(engel_subgroup(l, m, n), n)
            rhs = m > 1 and inside
            rec.case(
                lhs == rhs,
                witness=f"{name} depth {m}: {'collapses' if lhs else 'stays wide'}",
                counterexample=f"{name} depth {m}: central={lhs} expected={rhs}",
            )
    return rec.verdict()


def check_lem22(cfg):
    """Engel words of the whole ring give the commutator space; words of the commutator space give the center, then zero."""
    ctx = context(cfg.ring)
    n = cfg.degree
    if ctx.is_finite and ctx.char != 2:
        raise ContextError("stated for the characteristic-2 rings")
    if ctx.is_finite:
        rec = Recorder("lem22", MODE_EXHAUSTIVE, cfg)
    elif ctx is M2_POLY2:
        rec = Recorder("lem22", MODE_WINDOW, cfg)
    else:
        raise ContextError("no window variant over " + ctx.spec)
    ring = ring_window(ctx)
    tz = trace_zero_subgroup(ctx)
    center = central_subgroup(ctx)
    for m in (2, 3, 4):
        got = engel_subgroup(ring, m, n).slice(n)
        rec.case(
            got.rows == tz.slice(n).rows,
            witness=f"ring words depth {m} give the commutator group",
            counterexample=f"ring words depth {m}: dim {got.dim}",
        )
    got2 = engel_subgroup(tz, 2, n).slice(n)
    rec.case(
        got2.rows == center.slice(n).rows,
        witness="commutator-space words depth 2 give the center",
        counterexample=f"depth-2 words of the commutator space: dim {got2.dim}",
    )
    for m in (3, 4):
        gotm = engel_subgroup(tz, m, n).slice(n)
        rec.case(
            gotm.is_zero,
            counterexample=f"depth-{m} words of the commutator space: dim {gotm.dim}",
        )
    cc = ctx.central_closure()
    full = FieldSpan.full(cc)
    tzs = FieldSpan.trace_zero(cc)
    rec.case(
        span_engel(full, 2) == tzs and span_engel(full, 3) == tzs,
        counterexample="closure-level ring words do not give the trace-zero span",
    )
    e2 = span_engel(tzs, 2)
    rec.case(
        e2.dim == 1 and e2.contains(Mat2.identity(cc)) and span_engel(tzs, 3).dim == 0,
        counterexample="closure-level words of the trace-zero span misbehave",
    )
    return rec.verdict()


def check_lem23(cfg):
    """A noncentral Lie ideal sits inside the commutator space exactly when abelian or of commutator type."""
    ctx = context(cfg.ring)
    n = cfg.degree
    if ctx.spec == "m2-gf2":
        rec = Recorder("lem23", MODE_EXHAUSTIVE, cfg)
        t = tables("m2-gf2")
        for rows in gf2_lie_subgroup_rows():
            if not rows or all(t.is_central_code(r) for r in rows):
                rec.ok()
                continue
            l = AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in rows])
            inside = all(reduce_low(list(t.sl2_rows), r) == 0 for r in rows)
            cls = classify_lie_ideal(l, n)
            rhs = cls in (LieIdealClass.ABELIAN_NONCENTRAL, LieIdealClass.TYPE_I)
            rec.case(
                inside == rhs,
                counterexample=f"rows {rows}: inside={inside} class={cls.value}",
            )
        return rec.verdict()
    if ctx.is_finite or ctx is M2_POLY2:
        mode = MODE_EXHAUSTIVE if ctx.is_finite else MODE_WINDOW
        rec = Recorder("lem23", mode, cfg)
        for name, l in _noncentral_lie_catalog(ctx, n):
            inside = _slice_trace_zero(l, n)
            cls = classify_lie_ideal(l, n)
            rhs = cls in (LieIdealClass.ABELIAN_NONCENTRAL, LieIdealClass.TYPE_I)
            rec.case(
                inside == rhs,
                witness=f"{name}: class {cls.value}",
                counterexample=f"{name}: inside={inside} class={cls.value}",
            )
        return rec.verdict()
    raise ContextError("no variant over " + ctx.spec)


def _family_rhs_typei(coeffs):
    return any(a.trace().is_zero for a in coeffs)


def _family_rhs_typeii(coeffs):
    return is_central(coeffs[-1]) or any(a.trace().is_zero for a in coeffs[:-1])


def check_thm36(cfg):
    """Multilinear brackets against a Lie ideal centralize according to its class."""
    ctx = context(cfg.ring)
    n = cfg.degree
    if ctx.spec == "m2-gf2":
        rec = Recorder("thm36", MODE_EXHAUSTIVE, cfg)
        t = tables("m2-gf2")
        mats = [t.mat_of(c) for c in range(t.n)]
        for rows in gf2_lie_subgroup_rows():
            if not rows or all(t.is_central_code(r) for r in rows):
                continue
            l = AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in rows])
            cls = classify_lie_ideal(l, n)
            rhs_of = (
                _family_rhs_typeii
                if cls is LieIdealClass.TYPE_II
                else _family_rhs_typei
            )
            families = [(a,) for a in mats] + [(a, b) for a in mats for b in mats]
            for coeffs in families:
                lhs = all_central_slice(fold_bracket(coeffs, l, n), n)
                rhs = rhs_of(coeffs)
                rec.case(
                    lhs == rhs,
                    counterexample=f"class {cls.value} coeffs {[str(c) for c in coeffs]}: lhs={lhs} rhs={rhs}",
                )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-gf2 or m2-poly2")
    rec = Recorder("thm36", MODE_RANDOM, cfg)
    quota = max(8, min(cfg.samples, 120))
    for name, l in _noncentral_lie_catalog(ctx, n):
        cls = classify_lie_ideal(l, n)
        rhs_of = (
            _family_rhs_typeii if cls is LieIdealClass.TYPE_II else _family_rhs_typei
        )
        for i in range(quota):
            rng = cfg.rng(f"thm36:{name}", i)
            size = rng.randrange(1, 4)
            coeffs = []
            for _ in range(size):
                kind = rng.randrange(3)
                if kind == 0:
                    coeffs.append(random_trace_zero(ctx, rng, degree_bound=2))
                elif kind == 1:
                    coeffs.append(random_matrix(ctx, rng, degree_bound=2))
                else:
                    coeffs.append(
                        Mat2.identity(ctx).scale(Poly(rng.randrange(0, 8)))
                    )
            lhs = all_central_slice(fold_bracket(coeffs, l, n), n)
            rhs = rhs_of(coeffs)
            rec.case(
                lhs == rhs,
                counterexample=(
                    f"{name} ({cls.value}) coeffs {[str(c) for c in coeffs]}: "
                    f"lhs={lhs} rhs={rhs}"
                ),
            )
    return rec.verdict()


def check_thm37(cfg):
    """Two Engel layers commute exactly when the Lie ideal sits in the commutator space of an exceptional ring."""
    ctx = context(cfg.ring)
    n = cfg.degree
    if ctx.spec == "m2-gf3":
        rec = Recorder("thm37", MODE_EXHAUSTIVE, cfg)
        for sp in f3_lie_ideals():
            if all(is_central(b) for b in sp.basis()):
                continue
            for m, k in _ENGEL_PAIRS:
                br = span_bracket(span_engel(sp, m), span_engel(sp, k))
                rec.case(
                    br.dim > 0,
                    counterexample=f"dim {sp.dim} Lie ideal: layers ({m},{k}) commute over GF(3)",
                )
        return rec.verdict()
    if ctx.is_finite or ctx is M2_POLY2:
        rec = Recorder("thm37", MODE_EXHAUSTIVE if ctx.is_finite else MODE_WINDOW, cfg)
    else:
        raise ContextError("no variant over " + ctx.spec)
    for name, l in _noncentral_lie_catalog(ctx, n):
        inside = _slice_trace_zero(l, n)
        for m, k in _ENGEL_PAIRS:
            em = engel_subgroup(l, m, n)
            ek = engel_subgroup(l, k, n)
            lhs = bracket_subgroup(em, ek, n).slice(n).is_zero
            rec.case(
                lhs == inside,
                witness=f"{name} layers ({m},{k}): {'commute' if lhs else 'do not commute'}",
                counterexample=f"{name} layers ({m},{k}): lhs={lhs} inside={inside}",
            )
    if ctx is M2_POLY2:
        l4 = example4_lie_ideal()
        e2 = engel_subgroup(l4, 2, n).slice(n)
        l4b = l4.slice(n)
        witness = None
        for i in range(100):
            rng = cfg.rng("thm37-hunt", i)
            x = sum(
                (b for b in e2.basis() if rng.randrange(2)),
                Mat2.zero(ctx),
            )
            y = sum(
                (b for b in l4b.basis() if rng.randrange(2)),
                Mat2.zero(ctx),
            )
            c = commutator(x, y)
            if not c.is_zero:
                witness = (i + 1, c)
                break
        rec.case(
            witness is not None,
            witness=(
                f"enlarged trace-zero ideal: noncommuting layer pair after {witness[0]} draws"
                if witness
                else None
            ),
            counterexample="no noncommuting pair found in 100 draws",
        )
    return rec.verdict()


def check_ex4(cfg):
    """The enlarged trace-zero ideal spans everything yet contains no matrix ideal."""
    ctx = context(cfg.ring)
    if ctx is not M2_POLY2:
        raise ContextError("this example lives over m2-poly2")
    rec = Recorder("ex4", MODE_WINDOW, cfg)
    bound = cfg.degree
    n = bound + 2
    l = example4_lie_ideal()
    cls = classify_lie_ideal(l, n)
    rec.case(
        cls is LieIdealClass.TYPE_II,
        witness="classified as full-span",
        counterexample=f"classified as {cls.value}",
    )
    sl = l.slice(n)
    e11 = Mat2.unit(ctx, 1, 1)
    one = Poly.one()
    for bits in range(1, 1 << (bound + 1)):
        g = Poly(bits)
        inside = sl.contains(e11.scale(g))
        rec.case(
            inside == (g == one),
            counterexample=f"({g})*e11 containment is {inside}",
        )
    t = Poly.t()
    rec.case(
        not sl.contains(e11.scale(t)),
        counterexample="t*e11 slipped into the ideal",
    )
    full = ideal_window(ctx, one)
    rec.case(
        not sl.contains_slice(full.slice(n)),
        counterexample="the whole ring fits inside the enlarged ideal",
    )
    return rec.verdict()
