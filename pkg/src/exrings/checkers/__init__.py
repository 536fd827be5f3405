"""Registry of verification checkers, keyed by short statement ids."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ContextError
from .brackets import check_lem17, check_thm25, check_thm28, check_thm31, check_thm32
from .commutators import (
    check_ex2,
    check_lem2,
    check_lem6,
    check_lem8,
    check_lem10,
    check_lem11,
    check_lem20,
    check_thm24,
)
from .derivs import (
    check_lem14,
    check_lem18,
    check_remark1,
    check_thm29,
    check_thm34,
    check_thm35,
    outer_pair_certificate,
)
from .lie_ideals import (
    check_ex4,
    check_lem19,
    check_lem21,
    check_lem22,
    check_lem23,
    check_thm36,
    check_thm37,
)
from .subspaces import check_ex3, check_lem5, check_thm16, check_thm19, check_thm23

__all__ = ["CheckerInfo", "THEOREMS", "run_checker", "outer_pair_certificate"]


@dataclass(frozen=True)
class CheckerInfo:
    theorem: str
    summary: str
    rings: tuple
    defaults: tuple
    fn: object

    def run(self, cfg):
        if cfg.ring not in self.rings:
            raise ContextError(
                f"{self.theorem} does not run over {cfg.ring}; "
                f"supported: {', '.join(self.rings)}"
            )
        return self.fn(cfg)


def _info(theorem, summary, rings, fn, defaults=None):
    return CheckerInfo(theorem, summary, tuple(rings), tuple(defaults or rings), fn)


THEOREMS = {
    info.theorem: info
    for info in (
        _info(
            "lem2",
            "solutions of the double-bracket annihilator equation stay on the witness line",
            ("m2-gf2", "m2-gf4", "m2-rat2"),
            check_lem2,
        ),
        _info(
            "lem5",
            "multiplicatively closed bracket-invariant subgroups are everything or a line plus center",
            ("m2-gf2",),
            check_lem5,
        ),
        _info(
            "lem6",
            "trace zero, square-central, and commutator-space membership coincide",
            ("m2-gf2", "m2-gf4", "m2-poly2", "m2-rat2"),
            check_lem6,
        ),
        _info(
            "lem8",
            "noncentral elements and subgroups generate noncentral brackets",
            ("m2-gf2", "m2-gf3", "m2-gf4", "m2-poly2"),
            check_lem8,
        ),
        _info(
            "lem10",
            "brackets of two matrix ideals cover the trace-zero part of the product ideal",
            ("m2-poly2",),
            check_lem10,
        ),
        _info(
            "lem11",
            "brackets against the units span at least a plane around any noncentral element",
            ("m2-gf2", "m2-gf4", "m2-poly2"),
            check_lem11,
        ),
        _info(
            "lem14",
            "a derivation centralizes commutators exactly when it brackets with a trace-zero witness",
            ("m2-gf2", "m2-gf4", "m2-poly2"),
            check_lem14,
        ),
        _info(
            "lem17",
            "a sum of iterated bracketing maps kills commutators iff its reversal is center-valued",
            ("m2-gf2", "m2-gf4", "m2-poly2"),
            check_lem17,
        ),
        _info(
            "lem18",
            "center-moving derivations move infinitely many abelian noncentral Lie ideals",
            ("m2-poly2",),
            check_lem18,
        ),
        _info(
            "lem19",
            "abelian Lie ideals are a line plus center; nonabelian ones absorb an ideal bracket",
            ("m2-gf2", "m2-poly2"),
            check_lem19,
        ),
        _info(
            "lem20",
            "trace-zero pairs bracket centrally in characteristic 2 but not over GF(3)",
            ("m2-gf2", "m2-gf3", "m2-gf4", "m2-poly2"),
            check_lem20,
        ),
        _info(
            "lem21",
            "Engel words collapse centrally exactly for commutator-space ideals at depth above one",
            ("m2-gf2", "m2-gf3", "m2-gf4", "m2-poly2"),
            check_lem21,
        ),
        _info(
            "lem22",
            "ring Engel words give the commutator space; its own words give the center, then zero",
            ("m2-gf2", "m2-gf4", "m2-poly2"),
            check_lem22,
        ),
        _info(
            "lem23",
            "a noncentral Lie ideal sits in the commutator space iff abelian or of commutator type",
            ("m2-gf2", "m2-gf4", "m2-poly2"),
            check_lem23,
        ),
        _info(
            "thm16",
            "classification of bracket-invariant additive subgroups of the finite rings",
            ("m2-gf2", "m2-gf4"),
            check_thm16,
            defaults=("m2-gf2",),
        ),
        _info(
            "thm19",
            "noncentral invariant subgroups contain a scaled center and a line or the trace-zero part",
            ("m2-gf2", "m2-poly2"),
            check_thm19,
        ),
        _info(
            "thm23",
            "noncentral Lie-invariant subgroups contain scaled ideal brackets or are a line plus center",
            ("m2-gf2", "m2-poly2"),
            check_thm23,
        ),
        _info(
            "thm24",
            "the trace-zero part generates the whole ring as a subring",
            ("m2-gf2", "m2-gf4", "m2-poly2"),
            check_thm24,
        ),
        _info(
            "thm25",
            "folded brackets against an ideal's commutators centralize iff a coefficient has trace zero",
            ("m2-gf2", "m2-poly2"),
            check_thm25,
        ),
        _info(
            "thm28",
            "with a noncentral innermost coefficient, the outer coefficients decide centralization",
            ("m2-gf2", "m2-poly2"),
            check_thm28,
        ),
        _info(
            "thm29",
            "composed derivations on an ideal's commutators match trace and certificate conditions",
            ("m2-poly2",),
            check_thm29,
        ),
        _info(
            "thm31",
            "folded brackets annihilate an ideal's commutators iff a later coefficient has trace zero",
            ("m2-gf2", "m2-poly2"),
            check_thm31,
        ),
        _info(
            "thm32",
            "generalized maps kill commutators iff the reversed map is center-valued",
            ("m2-gf2", "m2-gf4", "m2-poly2"),
            check_thm32,
        ),
        _info(
            "thm34",
            "composed derivations on an abelian ideal match the twisted certificate conditions",
            ("m2-poly2",),
            check_thm34,
        ),
        _info(
            "thm35",
            "composed derivations centralize the whole ring only in degenerate or proportional cases",
            ("m2-poly2",),
            check_thm35,
        ),
        _info(
            "thm36",
            "multilinear brackets against a Lie ideal centralize according to its class",
            ("m2-gf2", "m2-poly2"),
            check_thm36,
        ),
        _info(
            "thm37",
            "two Engel layers commute iff the ideal sits in the commutator space",
            ("m2-gf2", "m2-gf3", "m2-gf4", "m2-poly2"),
            check_thm37,
        ),
        _info(
            "ex2",
            "a square-zero trace-zero matrix inside the commutator space but outside its window slice",
            ("m2-tpoly2",),
            check_ex2,
        ),
        _info(
            "ex3",
            "an invariant subgroup with a three-dimensional span and a bit-exact window basis",
            ("m2-poly2",),
            check_ex3,
        ),
        _info(
            "ex4",
            "a full-span Lie ideal containing no nonzero matrix ideal",
            ("m2-poly2",),
            check_ex4,
        ),
        _info(
            "remark1",
            "a four-slot bracket identity holding on an ideal but failing on its central span",
            ("m2-poly2",),
            check_remark1,
        ),
    )
}


def run_checker(theorem, cfg):
    """Run one registered checker under the given configuration."""
    info = THEOREMS.get(theorem)
    if info is None:
        known = ", ".join(sorted(THEOREMS))
        raise ContextError(f"unknown statement id {theorem!r}; known: {known}")
    return info.run(cfg)
