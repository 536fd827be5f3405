"""2x2 matrix rings over the scalar tower.

A ``RingContext`` names the scalar level and an optional restriction of the
entry set.  The one restriction in use is the augmentation ideal of
GF(2)[t]: entries drawn from t*GF(2)[t], which yields a prime ring without
identity whose central closure is still all of M2 over GF(2)(t).

``Mat2`` values are immutable 4-tuples of scalars in entry order
(1,1), (1,2), (2,1), (2,2).  The bracket operations, centrality tests, and
the three independent commutator-space membership tests that the theorem
checkers cross-validate all live here.
"""

from __future__ import annotations

import enum
import functools as _functools
import re
from dataclasses import dataclass, field

from .errors import ContextError
from .scalars import DOMAINS, GF2, GF3, GF4, POLY2, RAT2, Poly, Rat


class Restriction(enum.Enum):
    FULL = "full"
    AUGMENTATION = "augmentation"


@dataclass(frozen=True)
class RingContext:
    spec: str
    domain: object = field(compare=False)
    restriction: Restriction = Restriction.FULL

    @property
    def char(self):
        return self.domain.char

    @property
    def is_finite(self):
        return self.domain.is_finite

    def central_closure(self):
        """Context of the matrix ring over the extended centroid."""
        if self.domain is POLY2:
            return M2_RAT2
        return CONTEXTS[f"m2-{self.domain.name}"]

    def entry_ok(self, x):
        if self.restriction is Restriction.AUGMENTATION:
            return isinstance(x, Poly) and (x.bits & 1) == 0
        return True

    def __repr__(self):
        return f"<ring {self.spec}>"


M2_GF2 = RingContext("m2-gf2", GF2)
M2_GF3 = RingContext("m2-gf3", GF3)
M2_GF4 = RingContext("m2-gf4", GF4)
M2_POLY2 = RingContext("m2-poly2", POLY2)
M2_TPOLY2 = RingContext("m2-tpoly2", POLY2, Restriction.AUGMENTATION)
M2_RAT2 = RingContext("m2-rat2", RAT2)

CONTEXTS = {c.spec: c for c in (M2_GF2, M2_GF3, M2_GF4, M2_POLY2, M2_TPOLY2, M2_RAT2)}

# promotion lattice: tpoly2 embeds in poly2 embeds in rat2; fields stand alone
_PROMOTE_RANK = {"m2-tpoly2": 0, "m2-poly2": 1, "m2-rat2": 2}


class Mat2:
    """Immutable 2x2 matrix over one scalar level."""

    __slots__ = ("ctx", "e")

    def __init__(self, ctx, entries, check=True):
        e = tuple(entries)
        if len(e) != 4:
            raise ValueError("a 2x2 matrix needs exactly 4 entries")
        if check and not all(ctx.entry_ok(x) for x in e):
            raise ContextError(f"entries outside the {ctx.spec} entry set")
        self.ctx = ctx
        self.e = e

    @classmethod
    def zero(cls, ctx):
        z = ctx.domain.zero()
        return cls(ctx, (z, z, z, z), check=False)

    @classmethod
    def identity(cls, ctx):
        z, o = ctx.domain.zero(), ctx.domain.one()
        return cls(ctx, (o, z, z, o))

    @classmethod
    def unit(cls, ctx, i, j):
        """Matrix unit e_ij, 1-based indices."""
        if not (i in (1, 2) and j in (1, 2)):
            raise ValueError("matrix unit indices must be 1 or 2")
        z, o = ctx.domain.zero(), ctx.domain.one()
        e = [z, z, z, z]
        e[(i - 1) * 2 + (j - 1)] = o
        return cls(ctx, e)

    @classmethod
    def scalar(cls, ctx, c):
        z = ctx.domain.zero()
        return cls(ctx, (c, z, z, c))

    @classmethod
    def from_rows(cls, ctx, rows):
        (a, b), (c, d) = rows
        return cls(ctx, (a, b, c, d))

    @property
    def is_zero(self):
        return all(x.is_zero for x in self.e)

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.ctx == other.ctx and self.e == other.e

    def __hash__(self):
        return hash((self.ctx.spec, self.e))

    def __add__(self, other):
        a, b = _common(self, other)
        return Mat2(a.ctx, tuple(x + y for x, y in zip(a.e, b.e)), check=False)

    def __sub__(self, other):
        a, b = _common(self, other)
        return Mat2(a.ctx, tuple(x - y for x, y in zip(a.e, b.e)), check=False)

    def __neg__(self):
        return Mat2(self.ctx, tuple(-x for x in self.e), check=False)

    def __mul__(self, other):
        a, b = _common(self, other)
        (p, q, r, s), (w, x, y, z) = a.e, b.e
        return Mat2(
            a.ctx,
            (p * w + q * y, p * x + q * z, r * w + s * y, r * x + s * z),
            check=False,
        )

    def scale(self, c):
        """Multiply every entry by a scalar of the same level (or a Poly into Rat)."""
        m = self
        if isinstance(c, Rat) and m.ctx.domain is POLY2:
            m = promote(m, M2_RAT2)
        if isinstance(c, Poly) and m.ctx.domain is RAT2:
            c = Rat(c)
        return Mat2(m.ctx, tuple(c * x for x in m.e), check=False)

    def trace(self):
        return self.e[0] + self.e[3]

    def det(self):
        return self.e[0] * self.e[3] - self.e[1] * self.e[2]

    def entry(self, i, j):
        return self.e[(i - 1) * 2 + (j - 1)]

    def __str__(self):
        a, b, c, d = self.e
        return f"[[{a}, {b}],[{c}, {d}]]"

    def __repr__(self):
        return f"Mat2({self.ctx.spec}, {self})"


def _common(x, y):
    """Promote two matrices to their least common context."""
    if x.ctx == y.ctx:
        return x, y
    rx = _PROMOTE_RANK.get(x.ctx.spec)
    ry = _PROMOTE_RANK.get(y.ctx.spec)
    if rx is None or ry is None:
        raise ContextError(f"incompatible contexts {x.ctx.spec} and {y.ctx.spec}")
    target = x.ctx if rx >= ry else y.ctx
    return promote(x, target), promote(y, target)


def promote(m, ctx):
    """Embed a matrix in a wider context along tpoly2 < poly2 < rat2."""
    if m.ctx == ctx:
        return m
    rx, ry = _PROMOTE_RANK.get(m.ctx.spec), _PROMOTE_RANK.get(ctx.spec)
    if rx is None or ry is None or rx > ry:
        raise ContextError(f"cannot promote {m.ctx.spec} to {ctx.spec}")
    if ctx.domain is RAT2:
        return Mat2(ctx, tuple(Rat(x) if isinstance(x, Poly) else x for x in m.e), check=False)
    return Mat2(ctx, m.e, check=False)


def commutator(x, y):
    """Lie bracket [x, y] = xy - yx."""
    return x * y - y * x


def iterated_bracket(coeffs, x):
    """[a_1, ..., a_n, x]: the composite ad_{a_1} ... ad_{a_n} applied to x."""
    out = x
    for a in reversed(list(coeffs)):
        out = commutator(a, out)
    return out


def engel(args):
    """Left-normed Engel word: E_1(x) = x, E_m(x_1..x_m) = [E_{m-1}, x_m]."""
    args = list(args)
    if not args:
        raise ValueError("engel needs at least one argument")
    out = args[0]
    for x in args[1:]:
        out = commutator(out, x)
    return out


def is_central(m):
    """Scalar multiple of the identity (equivalently, commutes with everything)."""
    a, b, c, d = m.e
    return b.is_zero and c.is_zero and a == d


def in_commutator_space(m):
    """Membership of m in the commutator space of the central closure.

    Over a char-2 scalar this is the trace criterion.  GF(3) contexts are
    rejected: the criterion characterizes the exceptional (char 2,
    4-dimensional) case only.
    """
    if m.ctx.char != 2:
        raise ContextError("commutator-space test requires a char-2 scalar level")
    return m.trace().is_zero


def square_central(m):
    """Whether m^2 is central; agrees with the trace test over char-2 fields."""
    return is_central(m * m)


def _field_reduce(rows, vec):
    """Reduce a length-4 field vector against rows of (pivot, vector) pairs."""
    vec = list(vec)
    for pivot, r in rows:
        if not vec[pivot].is_zero:
            c = vec[pivot]
            vec = [x - c * y for x, y in zip(vec, r)]
    return vec


def _field_insert(rows, vec):
    vec = _field_reduce(rows, vec)
    for pivot in range(4):
        if not vec[pivot].is_zero:
            inv = vec[pivot].inverse()
            vec = [inv * x for x in vec]
            for k, (p, r) in enumerate(rows):
                if not r[pivot].is_zero:
                    c = r[pivot]
                    rows[k] = (p, [x - c * y for x, y in zip(r, vec)])
            rows.append((pivot, vec))
            rows.sort(key=lambda pr: pr[0])
            return True
    return False


class CommutatorSpanOracle:
    """Independent membership oracle for the commutator space.

    Accumulates the scalar span of actual commutators of the central
    closure and answers membership by elimination.  Brackets are
    biadditive, so commutators of a module basis span the same space as
    commutators of all pairs; sampled extra pairs are folded in anyway
    when a generator is supplied.  Kept deliberately separate from the
    trace criterion so the two can be cross-checked.
    """

    def __init__(self, ctx, rng=None, extra_pairs=32):
        cc = ctx.central_closure()
        self.cc = cc
        self._codes = None
        if cc.spec in ("m2-gf2", "m2-gf4"):
            from .finite_tables import tables

            self._codes = tables(cc.spec)
            self._rows = self._codes.comm_span_rows
            return
        rows = []
        units = [Mat2.unit(cc, i, j) for i in (1, 2) for j in (1, 2)]
        for x in units:
            for y in units:
                _field_insert(rows, commutator(x, y).e)
        if rng is not None:
            for _ in range(extra_pairs):
                x = sample_matrix(cc, rng)
                y = sample_matrix(cc, rng)
                _field_insert(rows, commutator(x, y).e)
        self._rows = rows

    def contains(self, m):
        mm = promote(m, self.cc)
        if self._codes is not None:
            from .gf2linalg import reduce_low

            return reduce_low(self._rows, self._codes.code_of(mm)) == 0
        return all(x.is_zero for x in _field_reduce(self._rows, mm.e))


def commutator_span_contains(m, rng=None, extra_pairs=32):
    """One-shot membership test; reuses a cached oracle for finite contexts."""
    cc = m.ctx.central_closure()
    if cc.is_finite and rng is None:
        return _finite_span_oracle(cc.spec).contains(m)
    return CommutatorSpanOracle(m.ctx, rng, extra_pairs).contains(m)


@_functools.cache
def _finite_span_oracle(spec):
    return CommutatorSpanOracle(CONTEXTS[spec])


def all_matrices(ctx):
    """All matrices of a finite context, in a fixed deterministic order."""
    if not ctx.is_finite:
        raise ContextError(f"{ctx.spec} is not finite")
    els = ctx.domain.elements()
    out = []
    for a in els:
        for b in els:
            for c in els:
                for d in els:
                    out.append(Mat2(ctx, (a, b, c, d), check=False))
    return out


def sample_matrix(ctx, rng, degree_bound=4):
    """Uniform random matrix; polynomial entries have degree <= degree_bound."""
    if ctx.restriction is Restriction.AUGMENTATION:
        lead = max(degree_bound - 1, 0)
        entries = tuple(Poly(rng.getrandbits(lead + 1) << 1) for _ in range(4))
        return Mat2(ctx, entries, check=False)
    return Mat2(ctx, tuple(ctx.domain.sample(rng, degree_bound) for _ in range(4)), check=False)


_MATRIX_RE = re.compile(r"^\[\[([^\[\],]+),([^\[\],]+)\],\[([^\[\],]+),([^\[\],]+)\]\]$")
_UNIT_RE = re.compile(r"^e([12])([12])$")


def parse_matrix(text, ctx):
    """Parse a matrix literal, a matrix-unit shorthand, or a sum of unit terms.

    Grammar: ``[[a, b],[c, d]]`` with scalar entries, or terms joined by
    ``+`` where each term is ``eIJ``, ``(scalar)*eIJ``, ``1`` (identity) or
    ``0``.  Round-trips with ``str`` on matrix values.
    """
    s = text.replace(" ", "")
    m = _MATRIX_RE.match(s)
    if m:
        return Mat2(ctx, tuple(ctx.domain.parse(g) for g in m.groups()))
    total = Mat2.zero(ctx)
    for term in _split_top(s):
        total = total + _parse_term(term, ctx)
    return total


def _split_top(s):
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _parse_term(term, ctx):
    if term == "0":
        return Mat2.zero(ctx)
    if term == "1":
        return Mat2.identity(ctx)
    m = _UNIT_RE.match(term)
    if m:
        return Mat2.unit(ctx, int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"\((.+)\)\*e([12])([12])", term)
    if m:
        # build the scaled entry directly so augmentation contexts accept
        # terms like (t)*e12 whose bare unit would be out of range
        c = ctx.domain.parse(m.group(1))
        idx = (int(m.group(2)) - 1) * 2 + (int(m.group(3)) - 1)
        entries = [ctx.domain.zero()] * 4
        entries[idx] = c
        return Mat2(ctx, tuple(entries))
    raise ValueError(f"bad matrix term {term!r}")


def max_entry_degree(m):
    """Largest entry degree of a polynomial-entry matrix (-1 for zero)."""
    if m.ctx.domain is not POLY2:
        raise ContextError("entry degrees are defined for polynomial contexts")
    return max(x.degree for x in m.e)
