"""Checkers for multilinear bracket identities and generalized linear maps."""

from __future__ import annotations

from ..derivations import EntrywiseDerivative, GLMap, iterated_ad_glmap
from ..errors import ContextError
from ..matrices import M2_POLY2, Mat2, is_central
from ..scalars import Poly
from ..subgroups import bracket_subgroup, ideal_window, ring_window
from ..verdicts import MODE_EXHAUSTIVE, MODE_RANDOM, Recorder
from .common import (
    all_central_slice,
    context,
    fold_bracket,
    random_matrix,
    random_noncentral,
    random_trace_zero,
)

_IDEAL_GENS = ("1", "t", "t^2+t+1")

# headroom so a nonvanishing fold cannot slip past the slice entirely
_FOLD_PAD = 8


def _char2_or_bust(ctx):
    if ctx.char != 2:
        raise ContextError("stated for the characteristic-2 rings")


def _random_coeff(ctx, rng, allow_central=True):
    kind = rng.randrange(3 if allow_central else 2)
    if kind == 0:
        return random_trace_zero(ctx, rng, degree_bound=2)
    if kind == 1:
        return random_matrix(ctx, rng, degree_bound=2)
    return Mat2.identity(ctx).scale(Poly(rng.randrange(0, 8)))


def _gf2_all_matrices(ctx):
    from ..finite_tables import tables

    t = tables("m2-gf2")
    return [t.mat_of(c) for c in range(t.n)]


def check_thm25(cfg):
    """Folded brackets against an ideal's commutators centralize exactly when a coefficient has trace zero."""
    ctx = context(cfg.ring)
    _char2_or_bust(ctx)
    n = cfg.degree
    if ctx.spec == "m2-gf2":
        rec = Recorder("thm25", MODE_EXHAUSTIVE, cfg)
        mats = _gf2_all_matrices(ctx)
        base = bracket_subgroup(ring_window(ctx), ring_window(ctx), n)
        families = [(a,) for a in mats] + [(a, b) for a in mats for b in mats]
        for coeffs in families:
            lhs = all_central_slice(fold_bracket(coeffs, base, n), n)
            rhs = any(a.trace().is_zero for a in coeffs)
            rec.case(
                lhs == rhs,
                counterexample=f"coeffs {[str(c) for c in coeffs]}: lhs={lhs} rhs={rhs}",
            )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-gf2 or m2-poly2")
    rec = Recorder("thm25", MODE_RANDOM, cfg)
    m = n + _FOLD_PAD
    quota = max(6, min(cfg.samples, 90) // len(_IDEAL_GENS))
    for gtext in _IDEAL_GENS:
        ideal = ideal_window(ctx, Poly.parse(gtext))
        base = bracket_subgroup(ideal, ideal, m)
        for i in range(quota):
            rng = cfg.rng(f"thm25:{gtext}", i)
            coeffs = [_random_coeff(ctx, rng) for _ in range(rng.randrange(1, 4))]
            lhs = all_central_slice(fold_bracket(coeffs, base, m), m)
            rhs = any(a.trace().is_zero for a in coeffs)
            rec.case(
                lhs == rhs,
                counterexample=(
                    f"ideal ({gtext}), coeffs {[str(c) for c in coeffs]}: "
                    f"lhs={lhs} rhs={rhs}"
                ),
            )
    return rec.verdict()


def check_thm28(cfg):
    """Folded brackets against a whole ideal, innermost coefficient noncentral: only the outer coefficients decide."""
    ctx = context(cfg.ring)
    _char2_or_bust(ctx)
    n = cfg.degree
    if ctx.spec == "m2-gf2":
        rec = Recorder("thm28", MODE_EXHAUSTIVE, cfg)
        mats = _gf2_all_matrices(ctx)
        base = ring_window(ctx)
        for last in mats:
            if is_central(last):
                continue
            for first in mats:
                coeffs = (first, last)
                lhs = all_central_slice(fold_bracket(coeffs, base, n), n)
                rhs = first.trace().is_zero
                rec.case(
                    lhs == rhs,
                    counterexample=f"coeffs {[str(c) for c in coeffs]}: lhs={lhs} rhs={rhs}",
                )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-gf2 or m2-poly2")
    rec = Recorder("thm28", MODE_RANDOM, cfg)
    m = n + _FOLD_PAD
    quota = max(6, min(cfg.samples, 90) // len(_IDEAL_GENS))
    for gtext in _IDEAL_GENS:
        base = ideal_window(ctx, Poly.parse(gtext))
        for i in range(quota):
            rng = cfg.rng(f"thm28:{gtext}", i)
            outer = [_random_coeff(ctx, rng) for _ in range(rng.randrange(1, 3))]
            coeffs = outer + [random_noncentral(ctx, rng, degree_bound=2)]
            lhs = all_central_slice(fold_bracket(coeffs, base, m), m)
            rhs = any(a.trace().is_zero for a in outer)
            rec.case(
                lhs == rhs,
                counterexample=(
                    f"ideal ({gtext}), coeffs {[str(c) for c in coeffs]}: "
                    f"lhs={lhs} rhs={rhs}"
                ),
            )
    return rec.verdict()


def check_thm31(cfg):
    """Folded brackets annihilate an ideal's commutators exactly when a coefficient past the first has trace zero."""
    ctx = context(cfg.ring)
    _char2_or_bust(ctx)
    n = cfg.degree
    if ctx.spec == "m2-gf2":
        rec = Recorder("thm31", MODE_EXHAUSTIVE, cfg)
        mats = _gf2_all_matrices(ctx)
        base = bracket_subgroup(ring_window(ctx), ring_window(ctx), n)
        for first in mats:
            if is_central(first):
                continue
            for last in mats:
                coeffs = (first, last)
                lhs = fold_bracket(coeffs, base, n).slice(n).is_zero
                rhs = last.trace().is_zero
                rec.case(
                    lhs == rhs,
                    counterexample=f"coeffs {[str(c) for c in coeffs]}: lhs={lhs} rhs={rhs}",
                )
        return rec.verdict()
    if ctx is not M2_POLY2:
        raise ContextError("this check runs over m2-gf2 or m2-poly2")
    rec = Recorder("thm31", MODE_RANDOM, cfg)
    m = n + _FOLD_PAD
    quota = max(6, min(cfg.samples, 90) // len(_IDEAL_GENS))
    for gtext in _IDEAL_GENS:
        ideal = ideal_window(ctx, Poly.parse(gtext))
        base = bracket_subgroup(ideal, ideal, m)
        for i in range(quota):
            rng = cfg.rng(f"thm31:{gtext}", i)
            rest = [_random_coeff(ctx, rng) for _ in range(rng.randrange(1, 3))]
            coeffs = [random_noncentral(ctx, rng, degree_bound=2)] + rest
            lhs = fold_bracket(coeffs, base, m).slice(m).is_zero
            rhs = any(a.trace().is_zero for a in rest)
            rec.case(
                lhs == rhs,
                counterexample=(
                    f"ideal ({gtext}), coeffs {[str(c) for c in coeffs]}: "
                    f"lhs={lhs} rhs={rhs}"
                ),
            )
    return rec.verdict()


def check_lem17(cfg):
    """A sum of iterated bracketing maps kills commutators exactly when its reversed sum is center-valued."""
    ctx = context(cfg.ring)
    _char2_or_bust(ctx)
    rec = Recorder("lem17", MODE_RANDOM, cfg)
    quota = max(8, min(cfg.samples, 150))
    bound = 2 if ctx is M2_POLY2 else 4
    for i in range(quota):
        rng = cfg.rng("lem17", i)
        phi = None
        for _ in range(rng.randrange(1, 4)):
            row = [
                random_matrix(ctx, rng, degree_bound=bound)
                for _ in range(rng.randrange(1, 4))
            ]
            term = iterated_ad_glmap(row)
            phi = term if phi is None else phi + term
        lhs = phi.vanishes_on_commutators()
        rhs = phi.star().maps_into_center()
        rec.case(
            lhs == rhs,
            counterexample=f"draw {i}: kills-commutators={lhs} star-central={rhs}",
        )
    return rec.verdict()


def _trace_glmap(ctx):
    units = {
        (i, j): Mat2.unit(ctx, i, j) for i in (1, 2) for j in (1, 2)
    }
    return GLMap(
        ctx,
        (
            (units[1, 1], units[1, 1]),
            (units[1, 2], units[2, 1]),
            (units[2, 1], units[1, 2]),
            (units[2, 2], units[2, 2]),
        ),
    )


def _random_glmap(ctx, rng, max_terms=4):
    bound = 2 if ctx is M2_POLY2 else 4
    terms = [
        (
            random_matrix(ctx, rng, degree_bound=bound),
            random_matrix(ctx, rng, degree_bound=bound),
        )
        for _ in range(rng.randrange(1, max_terms + 1))
    ]
    return GLMap(ctx, terms)


def check_thm32(cfg):
    """Generalized linear maps: commutator-killing matches a center-valued reverse, and an entrywise-derivative identity forces the zero map."""
    ctx = context(cfg.ring)
    _char2_or_bust(ctx)
    rec = Recorder("thm32", MODE_RANDOM, cfg)
    tr_map = _trace_glmap(ctx)
    lhs = tr_map.vanishes_on_commutators()
    rhs = tr_map.star().maps_into_center()
    rec.case(
        lhs and rhs,
        witness="trace map kills commutators and is center-valued after reversal",
        counterexample=f"trace map flags: {lhs} vs {rhs}",
    )
    quota = max(8, min(cfg.samples, 1000))
    for i in range(quota):
        rng = cfg.rng("thm32", i)
        phi = _random_glmap(ctx, rng)
        roll = rng.randrange(8)
        if roll == 0:
            phi = phi.compose(tr_map)
        elif roll == 1:
            phi = tr_map.compose(phi)
        lhs = phi.vanishes_on_commutators()
        rhs = phi.star().maps_into_center()
        rec.case(
            lhs == rhs,
            counterexample=f"draw {i}: kills-commutators={lhs} star-central={rhs}",
        )
    if ctx is not M2_POLY2:
        return rec.verdict()
    d = EntrywiseDerivative()
    t = Poly.t()
    units = [Mat2.unit(ctx, i, j) for i in (1, 2) for j in (1, 2)]
    probes = units + [u.scale(t) for u in units]
    for i in range(min(cfg.samples, 200)):
        rng = cfg.rng("thm32-derivative", i)
        phi = _random_glmap(ctx, rng)
        if phi.is_zero_map():
            rec.ok(witness=f"draw {i}: zero map, identity holds")
            continue
        moved = any(not d.apply(phi.apply(p)).is_zero for p in probes)
        rec.case(
            moved,
            counterexample=f"draw {i}: nonzero map with derivative-flat images",
        )
    return rec.verdict()
