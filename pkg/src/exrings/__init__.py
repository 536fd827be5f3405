"""Exact verification workbench for 2x2 matrix rings over GF(2)-based scalars.

The rings under study are the 2x2 matrices over GF(2), GF(4), GF(2)[t],
and GF(2)(t) (plus GF(3) as a cross-characteristic control).  Everything
is exact: scalars are bitmask polynomials or reduced fractions, subgroups
are reduced GF(2) bases, and every verdict is either an exhaustive scan, a
degree-window computation, or a seeded randomized search.
"""

from .errors import ContextError, TheoremFalsified, WindowError
from .matrices import (
    CONTEXTS,
    M2_GF2,
    M2_GF3,
    M2_GF4,
    M2_POLY2,
    M2_RAT2,
    M2_TPOLY2,
    Mat2,
    commutator,
    engel,
    is_central,
    iterated_bracket,
)
from .scalars import F2, F3, F4, Poly, Rat
from .subgroups import (
    AdditiveSubgroup,
    FieldSpan,
    LieIdealClass,
    bracket_subgroup,
    c_span,
    classify_lie_ideal,
    engel_subgroup,
    ideal_window,
    is_lie_ideal,
    ring_window,
    subring_closure,
)
from .verdicts import RunConfig, Verdict, render_report
from .checkers import THEOREMS, run_checker

__all__ = [
    "AdditiveSubgroup",
    "CONTEXTS",
    "ContextError",
    "F2",
    "F3",
    "F4",
    "FieldSpan",
    "LieIdealClass",
    "M2_GF2",
    "M2_GF3",
    "M2_GF4",
    "M2_POLY2",
    "M2_RAT2",
    "M2_TPOLY2",
    "Mat2",
    "Poly",
    "Rat",
    "RunConfig",
    "THEOREMS",
    "TheoremFalsified",
    "Verdict",
    "WindowError",
    "bracket_subgroup",
    "c_span",
    "classify_lie_ideal",
    "commutator",
    "engel",
    "engel_subgroup",
    "ideal_window",
    "is_central",
    "is_lie_ideal",
    "iterated_bracket",
    "render_report",
    "ring_window",
    "run_checker",
    "subring_closure",
]
