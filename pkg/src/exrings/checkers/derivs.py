"""Checkers for derivation composition identities on the exceptional rings.

The composed map delta(d(x)) is only GF(2)-additive, never C-linear, so
window evidence probes the additive basis of the target set directly plus
scalar-twisted probes where a C-span is quantified.
"""

from __future__ import annotations

from ..derivations import (
    EntrywiseDerivative,
    InnerDerivation,
    ScaledDerivation,
    SumDerivation,
    center_action,
    resolve_inner,
    second_order_decomposition,
)
from ..errors import ContextError
from ..finite_tables import tables
from ..matrices import M2_POLY2, Mat2, commutator, is_central, promote
from ..scalars import Poly
from ..subgroups import FieldSpan, bracket_subgroup, ideal_window, ring_window
from ..verdicts import MODE_EXHAUSTIVE, MODE_RANDOM, MODE_WINDOW, Recorder
from .common import (
    abelian_lie_ideal,
    context,
    example4_lie_ideal,
    trace_zero_subgroup,
)

_PROBE_DEPTH = 6


def _units(ctx):
    return [Mat2.unit(ctx, i, j) for i in (1, 2) for j in (1, 2)]


def _deep_probes(ctx):
    """t-power ladders over the matrix units; additive span of the window."""
    t = Poly.t()
    out = []
    for u in _units(ctx):
        cur = u
        for _ in range(_PROBE_DEPTH):
            out.append(cur)
            cur = cur.scale(t)
    out.append(Mat2.identity(ctx).scale(t))
    return out


def _pair_catalog(ctx):
    t = Poly.t()
    e11 = Mat2.unit(ctx, 1, 1)
    e12 = Mat2.unit(ctx, 1, 2)
    e21 = Mat2.unit(ctx, 2, 1)
    w = e12.scale(t) + e21
    dt = EntrywiseDerivative()
    ad = InnerDerivation
    return [
        ("outer/inner trace-zero", dt, ad(e12)),
        ("outer/inner traceful", dt, ad(e11)),
        ("outer/inner mixed-degree", dt, ad(w)),
        ("outer/inner traceful-shifted", dt, ad(e11 + e12)),
        ("outer/inner central", dt, ad(Mat2.identity(ctx).scale(t))),
        ("inner/inner trace-zero-outer", ad(e12), ad(e11)),
        ("inner/inner both-traceful", ad(e11), ad(e11)),
        ("inner/inner trace-zero-inner", ad(e11), ad(e12)),
        ("inner/inner both-traceful-scaled", ad(e11 + e12), ad(e11.scale(t))),
        ("central/outer", ad(Mat2.identity(ctx).scale(t)), dt),
        ("inner-trace-zero/outer", ad(e12), dt),
        ("inner-traceful/outer", ad(e11), dt),
        ("outer/outer matched", dt, dt),
        ("outer/outer inner-shift", dt, SumDerivation((dt, ad(e11)))),
        ("outer/outer t-scaled", dt, ScaledDerivation(t, dt)),
        ("outer/outer square-scaled", dt, ScaledDerivation(t * t, dt)),
        ("outer/outer both-scaled", ScaledDerivation(t, dt), ScaledDerivation(t, dt)),
    ]


def outer_pair_certificate(delta, d, ctx):
    """Certificate data for two center-moving derivations, taken at beta = t.

    eta = delta(beta)*d + d(beta)*delta kills the center, so it resolves to
    an inner witness g; the second-order decomposition writes d composed
    with itself as mu*d + [h, -].
    """
    cc = ctx.central_closure()
    gamma_d = center_action(d, ctx)
    gamma_delta = center_action(delta, ctx)
    if gamma_d.is_zero or gamma_delta.is_zero:
        raise ContextError("certificate needs two center-moving derivations")
    eta = SumDerivation((ScaledDerivation(gamma_delta, d), ScaledDerivation(gamma_d, delta)))
    res = resolve_inner(eta, ctx)
    mu, h = second_order_decomposition(d, ctx)
    return {
        "beta": cc.domain.parse("t"),
        "gamma_d": gamma_d,
        "gamma_delta": gamma_delta,
        "g": res.witness,
        "mu": mu,
        "h": h,
    }


def _composed_central_on(delta, d, probes):
    return all(is_central(delta.apply(d.apply(z))) for z in probes)


def check_lem14(cfg):
    """A derivation sends commutators into the center exactly when it brackets with a trace-zero witness."""
    ctx = context(cfg.ring)
    if ctx.is_finite:
        if ctx.char != 2:
            raise ContextError("stated for the characteristic-2 rings")
        rec = Recorder("lem14", MODE_EXHAUSTIVE, cfg)
        t = tables(cfg.ring)
        for code in range(t.n):
            lhs = all(t.is_central_code(t.comm(code, s)) for s in t.sl2_rows)
            rhs = t.mat_of(code).trace().is_zero
            rec.case(lhs == rhs, counterexample=f"witness {t.mat_of(code)}")
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("no window variant over " + ctx.spec)
    rec = Recorder("lem14", MODE_WINDOW, cfg)
    t = Poly.t()
    e11 = Mat2.unit(ctx, 1, 1)
    e12 = Mat2.unit(ctx, 1, 2)
    e21 = Mat2.unit(ctx, 2, 1)
    dt = EntrywiseDerivative()
    catalog = [
        ("bracket with e12", InnerDerivation(e12)),
        ("bracket with t*e12 + e21", InnerDerivation(e12.scale(t) + e21)),
        ("bracket with e11", InnerDerivation(e11)),
        ("bracket with t*e11", InnerDerivation(e11.scale(t))),
        ("entrywise derivative", dt),
        ("derivative plus bracket", SumDerivation((dt, InnerDerivation(e12)))),
        ("scaled derivative", ScaledDerivation(t * t, dt)),
    ]
    probes = trace_zero_subgroup(ctx).slice(_PROBE_DEPTH).basis()
    for name, d in catalog:
        lhs = all(is_central(d.apply(z)) for z in probes)
        res = resolve_inner(d, ctx)
        rhs = res.is_inner and res.witness.trace().is_zero
        rec.case(
            lhs == rhs,
            witness=f"{name}: {'centralizes' if lhs else 'escapes'}",
            counterexample=f"{name}: lhs={lhs} rhs={rhs}",
        )
    return rec.verdict()


def check_lem18(cfg):
    """A center-moving derivation moves infinitely many distinct abelian noncentral Lie ideals."""
    ctx = context(cfg.ring)
    if ctx is not M2_POLY2:
        raise ContextError("the moving-family construction lives over m2-poly2")
    from ..derivations import abelian_family

    rec = Recorder("lem18", MODE_WINDOW, cfg)
    t = Poly.t()
    e11 = Mat2.unit(ctx, 1, 1)
    dt = EntrywiseDerivative()
    catalog = [
        ("entrywise derivative", dt),
        ("t-scaled derivative", ScaledDerivation(t, dt)),
        ("derivative plus bracket", SumDerivation((dt, InnerDerivation(e11)))),
    ]
    count = 5
    for name, d in catalog:
        spans = abelian_family(d, ctx, count)
        witnesses = []
        for sp in spans:
            noncentral = [b for b in sp.basis() if not is_central(b)]
            moved = any(not sp.contains(d.apply(b)) for b in noncentral)
            rec.case(
                sp.dim == 2
                and sp.is_lie_ideal()
                and sp.is_abelian()
                and bool(noncentral)
                and moved,
                counterexample=f"{name}: degenerate family member",
            )
            witnesses.append(noncentral[0])
        for i in range(count):
            for j in range(i + 1, count):
                rec.case(
                    not commutator(witnesses[i], witnesses[j]).is_zero,
                    counterexample=f"{name}: members {i} and {j} share an abelian ideal",
                )
        rec.ok(witness=f"{name}: {count} distinct moved ideals")
    return rec.verdict()


def _thm29_rhs(delta, d, ctx):
    dres, deltares = resolve_inner(d, ctx), resolve_inner(delta, ctx)
    if dres.is_inner and deltares.is_inner:
        return (
            dres.witness.trace().is_zero or deltares.witness.trace().is_zero
        )
    if dres.is_inner:
        return dres.witness.trace().is_zero
    if deltares.is_inner:
        return deltares.witness.trace().is_zero
    cert = outer_pair_certificate(delta, d, ctx)
    g, h, mu = cert["g"], cert["h"], cert["mu"]
    if not h.trace().is_zero:
        return False
    if mu.is_zero != g.trace().is_zero:
        return False
    if not mu.is_zero:
        shifted = g * g + g.scale(cert["gamma_delta"] * mu)
        if not is_central(shifted):
            return False
    return True


def check_thm29(cfg):
    """Composed derivations centralize an ideal's commutators according to trace and certificate conditions."""
    ctx = context(cfg.ring)
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-poly2")
    rec = Recorder("thm29", MODE_WINDOW, cfg)
    n = _PROBE_DEPTH
    bases = [
        ("whole ring", bracket_subgroup(ring_window(ctx), ring_window(ctx), n)),
        ("ideal (t)", bracket_subgroup(ideal_window(ctx, Poly.t()), ideal_window(ctx, Poly.t()), n)),
    ]
    for name, delta, d in _pair_catalog(ctx):
        rhs = _thm29_rhs(delta, d, ctx)
        for iname, base in bases:
            probes = base.slice(n).basis()
            lhs = _composed_central_on(delta, d, probes)
            rec.case(
                lhs == rhs,
                witness=f"{name} on {iname}: {'centralizes' if lhs else 'escapes'}",
                counterexample=f"{name} on {iname}: lhs={lhs} rhs={rhs}",
            )
    return rec.verdict()


def _thm34_rhs(delta, d, ctx, w):
    dres, deltares = resolve_inner(d, ctx), resolve_inner(delta, ctx)
    if dres.is_inner and deltares.is_inner:
        return (
            dres.witness.trace().is_zero or deltares.witness.trace().is_zero
        )
    if dres.is_inner:
        return dres.witness.trace().is_zero
    if deltares.is_inner:
        return deltares.witness.trace().is_zero
    cert = outer_pair_certificate(delta, d, ctx)
    g, h, mu = cert["g"], cert["h"], cert["mu"]
    if not h.trace().is_zero:
        return False
    cc = ctx.central_closure()
    w_cc = promote(w, cc)
    one_cc = Mat2.identity(cc)
    twist = cert["gamma_delta"] * mu
    for z in (w_cc, one_cc):
        if not is_central(z.scale(twist) + commutator(g, z)):
            return False
    span = FieldSpan.span(cc, [w_cc, one_cc])
    preserved = span.contains(promote(d.apply(w), cc))
    if not preserved and not g.trace().is_zero:
        if not span.contains(g * g + g.scale(twist)):
            return False
    return True


def check_thm34(cfg):
    """Composed derivations on an abelian noncentral Lie ideal, with the twisted certificate conditions."""
    ctx = context(cfg.ring)
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-poly2")
    rec = Recorder("thm34", MODE_RANDOM, cfg)
    t = Poly.t()
    w = Mat2.unit(ctx, 1, 2).scale(t) + Mat2.unit(ctx, 2, 1)
    one = Mat2.identity(ctx)
    ladder = []
    for j in range(_PROBE_DEPTH):
        m = Poly.monomial(j)
        ladder.append(w.scale(m))
        ladder.append(one.scale(m))
    for i, (name, delta, d) in enumerate(_pair_catalog(ctx)):
        rng = cfg.rng("thm34", i)
        probes = list(ladder)
        for _ in range(8):
            probes.append(w.scale(Poly(rng.randrange(1, 64))))
        lhs = _composed_central_on(delta, d, probes)
        rhs = _thm34_rhs(delta, d, ctx, w)
        rec.case(
            lhs == rhs,
            witness=f"{name}: {'centralizes' if lhs else 'escapes'}",
            counterexample=f"{name}: lhs={lhs} rhs={rhs}",
        )
    return rec.verdict()


def _thm35_rhs(delta, d, ctx):
    dres, deltares = resolve_inner(d, ctx), resolve_inner(delta, ctx)
    if dres.is_inner and deltares.is_inner:
        return is_central(dres.witness) or deltares.witness.trace().is_zero
    if dres.is_inner:
        return is_central(dres.witness)
    if deltares.is_inner:
        return is_central(deltares.witness)
    cc = ctx.central_closure()
    gamma_d = center_action(d, ctx)
    gamma_delta = center_action(delta, ctx)
    probes = [promote(p, cc) for p in _deep_probes(ctx)]
    left = ScaledDerivation(gamma_delta, d)
    right = ScaledDerivation(gamma_d, delta)
    matched = all((left.apply(p) + right.apply(p)).is_zero for p in probes)
    square_zero = all(d.apply(d.apply(p)).is_zero for p in probes)
    return matched and square_zero


def check_thm35(cfg):
    """Composed derivations centralize the whole ring only in the degenerate and proportional cases."""
    ctx = context(cfg.ring)
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-poly2")
    rec = Recorder("thm35", MODE_WINDOW, cfg)
    probes = _deep_probes(ctx)
    for name, delta, d in _pair_catalog(ctx):
        lhs = _composed_central_on(delta, d, probes)
        rhs = _thm35_rhs(delta, d, ctx)
        rec.case(
            lhs == rhs,
            witness=f"{name}: {'centralizes' if lhs else 'escapes'}",
            counterexample=f"{name}: lhs={lhs} rhs={rhs}",
        )
    return rec.verdict()


def check_remark1(cfg):
    """A four-slot bracket identity can hold on a Lie ideal yet fail on its central span."""
    ctx = context(cfg.ring)
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-poly2")
    rec = Recorder("remark1", MODE_WINDOW, cfg)
    d = EntrywiseDerivative()
    l4 = example4_lie_ideal()
    basis = l4.slice(4).basis()
    images = []
    for x in basis:
        dx = d.apply(x)
        if not dx.is_zero and all(not (dx + y).is_zero for y in images):
            images.append(dx)
    holds = True
    for dx in images:
        for i, y1 in enumerate(basis):
            for y2 in basis[i + 1 :]:
                inner = commutator(y1, y2)
                if inner.is_zero:
                    continue
                mid = commutator(dx, inner)
                if mid.is_zero:
                    continue
                if any(not commutator(mid, z).is_zero for z in basis):
                    holds = False
    rec.case(
        holds,
        witness="identity holds on the enlarged trace-zero ideal",
        counterexample="identity fails already on the ideal itself",
    )
    t = Poly.t()
    e11 = Mat2.unit(ctx, 1, 1)
    e12 = Mat2.unit(ctx, 1, 2)
    val = commutator(
        commutator(d.apply(e11.scale(t)), commutator(e11, e12)), e11
    )
    rec.case(
        (val + e12).is_zero,
        witness="central-span witness: the four-slot bracket lands on e12",
        counterexample=f"central-span witness value {val}",
    )
    abelian = abelian_lie_ideal()
    ab_basis = abelian.slice(4).basis()
    w = Mat2.unit(ctx, 1, 2).scale(t) + Mat2.unit(ctx, 2, 1)
    ab_probes = ab_basis + [w.scale(Poly(5)), w.scale(Poly(7))]
    flag_l = all(
        commutator(y1, y2).is_zero for y1 in ab_basis for y2 in ab_basis
    )
    flag_lc = all(
        commutator(y1, y2).is_zero for y1 in ab_probes for y2 in ab_probes
    )
    rec.case(
        flag_l == flag_lc,
        witness="abelian case: ideal-level and span-level verdicts agree",
        counterexample="abelian case: span-level verdict diverges",
    )
    return rec.verdict()
