"""Finitely generated additive subgroups of the 2x2 rings, with windowed
GF(2) linear algebra.

A generator carries a multiplier tag describing which multiples of its
element belong to the subgroup:

* ``bits``: just the element itself (GF(2)-multiples);
* ``poly-full``: all GF(2)[t]-multiples;
* ``poly-ideal`` with a nonzero g: all g*GF(2)[t]-multiples.

Polynomial-level subgroups are infinite, so computations happen inside a
truncation window: the GF(2)-span of the tagged multiples whose entry
degrees stay below N.  Window vectors are coded entry-major (entries
(1,1), (1,2), (2,1), (2,2), then degree ascending), and every slice keeps
the unique low-pivot reduced echelon basis, so slice equality is a plain
comparison.  Operations whose results can outgrow the window (brackets,
products) are computed in a doubled window and restricted back, which is
evidence rather than proof; callers confirm stability by re-running at a
doubled N.

Finite contexts use the same machinery with the integer matrix codes of
``finite_tables`` as window vectors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import ContextError, TheoremFalsified, WindowError
from .gf2linalg import insert_high, insert_low, reduce_low, rref_low
from .matrices import (
    M2_POLY2,
    Mat2,
    Restriction,
    _field_insert,
    _field_reduce,
    commutator,
    is_central,
    max_entry_degree,
    parse_matrix,
    promote,
)
from .scalars import POLY2, Poly

KINDS = ("bits", "poly-full", "poly-ideal")


@dataclass(frozen=True)
class TaggedGenerator:
    element: Mat2
    kind: str = "bits"
    ideal_gen: object = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind != "bits":
            if self.element.ctx.domain is not POLY2:
                raise ContextError("polynomial multiplier tags need a polynomial context")
            if self.kind == "poly-ideal" and (
                not isinstance(self.ideal_gen, Poly) or self.ideal_gen.is_zero
            ):
                raise ValueError("poly-ideal tag needs a nonzero polynomial")
        if self.kind != "poly-ideal" and self.ideal_gen is not None:
            raise ValueError(f"{self.kind} generators carry no ideal polynomial")

    def closed_under_t(self):
        """Whether the tagged multiples of this generator absorb t-multiplication."""
        return self.kind in ("poly-full", "poly-ideal")

    def __str__(self):
        if self.kind == "poly-ideal":
            return f"poly-ideal {self.ideal_gen} {self.element}"
        return f"{self.kind} {self.element}"


def _entry_width(ctx):
    if ctx.domain is POLY2:
        return None  # window-dependent
    from .finite_tables import tables

    return tables(ctx.spec).width


def _vec_entry_major(m, n):
    """Entry-major window vector of a polynomial-entry matrix."""
    bits = 0
    for k, e in enumerate(m.e):
        if e.degree >= n:
            raise WindowError(f"entry degree {e.degree} does not fit window {n}")
        bits |= e.bits << (k * n)
    return bits


def _unvec_entry_major(bits, ctx, n):
    mask = (1 << n) - 1
    return Mat2(ctx, tuple(Poly((bits >> (k * n)) & mask) for k in range(4)), check=False)


def _vec_deg_major(m, big):
    """Degree-major vector (bit = 4*degree + entry), used for window splitting."""
    bits = 0
    for k, e in enumerate(m.e):
        if e.degree >= big:
            raise WindowError(f"entry degree {e.degree} does not fit window {big}")
        b, d = e.bits, 0
        while b:
            if b & 1:
                bits |= 1 << (4 * d + k)
            b >>= 1
            d += 1
    return bits


def _unvec_deg_major(bits, ctx):
    es = [0, 0, 0, 0]
    d = 0
    while bits:
        chunk = bits & 15
        for k in range(4):
            if chunk >> k & 1:
                es[k] |= 1 << d
        bits >>= 4
        d += 1
    return Mat2(ctx, tuple(Poly(b) for b in es), check=False)


@dataclass(frozen=True)
class TruncatedSlice:
    """Unique reduced GF(2) basis of a subgroup's degree-< N window."""

    ctx: object
    n: int
    rows: tuple

    @property
    def dim(self):
        return len(self.rows)

    @property
    def is_zero(self):
        return not self.rows

    def basis(self):
        if self.ctx.domain is POLY2:
            return [_unvec_entry_major(r, self.ctx, self.n) for r in self.rows]
        from .finite_tables import tables

        t = tables(self.ctx.spec)
        return [t.mat_of(r) for r in self.rows]

    def vector_of(self, m):
        if self.ctx.domain is POLY2:
            return _vec_entry_major(m, self.n)
        from .finite_tables import tables

        return tables(self.ctx.spec).code_of(m)

    def contains(self, m):
        return reduce_low(self.rows, self.vector_of(m)) == 0

    def contains_slice(self, other):
        return all(reduce_low(self.rows, r) == 0 for r in other.rows)


class AdditiveSubgroup:
    """Additive subgroup given by finitely many tagged generators."""

    __slots__ = ("ctx", "generators")

    def __init__(self, ctx, generators):
        gens = tuple(generators)
        for g in gens:
            if g.element.ctx != ctx:
                raise ContextError("generator context does not match the subgroup context")
        self.ctx = ctx
        self.generators = gens

    @classmethod
    def from_elements(cls, ctx, mats, kind="bits", ideal_gen=None):
        return cls(ctx, [TaggedGenerator(m, kind, ideal_gen) for m in mats])

    def __eq__(self, other):
        return (
            isinstance(other, AdditiveSubgroup)
            and self.ctx == other.ctx
            and self.generators == other.generators
        )

    def __repr__(self):
        return f"AdditiveSubgroup({self.ctx.spec}, {len(self.generators)} generators)"

    def slice(self, n):
        """Materialize the degree-< n window as a reduced GF(2) basis."""
        if self.ctx.domain is POLY2:
            vecs = []
            for g in self.generators:
                el = g.element
                if el.is_zero:
                    continue
                d = max_entry_degree(el)
                if g.kind == "bits":
                    if d < n:
                        vecs.append(_vec_entry_major(el, n))
                    continue
                step = el if g.kind == "poly-full" else el.scale(g.ideal_gen)
                if step.is_zero:
                    continue
                d = max_entry_degree(step)
                t = Poly.t()
                j = 0
                cur = step
                while d + j < n:
                    vecs.append(_vec_entry_major(cur, n))
                    cur = cur.scale(t)
                    j += 1
            return TruncatedSlice(self.ctx, n, rref_low(vecs))
        if not self.ctx.is_finite:
            raise ContextError(f"slices are not defined over {self.ctx.spec}")
        from .finite_tables import tables

        t = tables(self.ctx.spec)
        vecs = [t.code_of(g.element) for g in self.generators]
        return TruncatedSlice(self.ctx, n, rref_low(vecs))

    def closed_under_t(self):
        return bool(self.generators) and all(g.closed_under_t() for g in self.generators)


def ring_window(ctx):
    """The whole ring as a subgroup (window-level view for polynomial contexts)."""
    if ctx.domain is POLY2:
        if ctx.restriction is Restriction.AUGMENTATION:
            t = Poly.t()
            mats = [Mat2.unit(M2_POLY2, i, j).scale(t) for i in (1, 2) for j in (1, 2)]
            mats = [Mat2(ctx, m.e) for m in mats]
        else:
            mats = [Mat2.unit(ctx, i, j) for i in (1, 2) for j in (1, 2)]
        return AdditiveSubgroup.from_elements(ctx, mats, kind="poly-full")
    from .finite_tables import tables

    t = tables(ctx.spec)
    mats = [t.mat_of(1 << i) for i in range(t.dim)]
    return AdditiveSubgroup.from_elements(ctx, mats)


def ideal_window(ctx, g):
    """The two-sided ideal M2(g*GF(2)[t]) as a subgroup."""
    if ctx.domain is not POLY2 or ctx.restriction is not Restriction.FULL:
        raise ContextError("principal matrix ideals live over the full polynomial context")
    if g.is_zero:
        return AdditiveSubgroup(ctx, [])
    units = [Mat2.unit(ctx, i, j) for i in (1, 2) for j in (1, 2)]
    return AdditiveSubgroup.from_elements(ctx, units, kind="poly-ideal", ideal_gen=g)


def _window_restrict(mats, ctx, n, big):
    """Span of mats inside window `big`, restricted to window `n`.

    Degree-major coding makes the window-n coordinates a prefix, so after a
    high-pivot reduction the rows that fit entirely below 4n coordinates
    are exactly a basis of (span) intersect (window n).
    """
    rows = []
    for m in mats:
        if m.is_zero:
            continue
        insert_high(rows, _vec_deg_major(m, big))
    kept = [r for r in rows if r.bit_length() <= 4 * n]
    return [_unvec_deg_major(r, ctx) for r in kept]


def _tagged_from_basis(ctx, mats, n, t_closed):
    """Rebuild a subgroup from window-basis matrices with conservative tags.

    A basis element is tagged poly-full only when the source tags force
    closure under t-multiplication and both its t^0 and t^1 multiples are
    confirmed inside the window; everything else stays bits.
    """
    rows = rref_low([_vec_entry_major(m, n) for m in mats if not m.is_zero])
    sl = TruncatedSlice(ctx, n, rows)
    gens = []
    t = Poly.t()
    for m in sl.basis():
        kind = "bits"
        if t_closed and max_entry_degree(m) + 1 < n and sl.contains(m.scale(t)):
            kind = "poly-full"
        gens.append(TaggedGenerator(m, kind))
    return AdditiveSubgroup(ctx, gens)


def bracket_subgroup(a, b, n):
    """Additive subgroup generated by commutators of the two window slices."""
    if a.ctx != b.ctx:
        raise ContextError("bracket of subgroups over different contexts")
    ctx = a.ctx
    if ctx.domain is POLY2:
        big = 2 * n
        mats = [
            commutator(x, y)
            for x in a.slice(n).basis()
            for y in b.slice(n).basis()
        ]
        window = _window_restrict(mats, ctx, n, big)
        t_closed = a.closed_under_t() or b.closed_under_t()
        return _tagged_from_basis(ctx, window, n, t_closed)
    from .finite_tables import tables

    t = tables(ctx.spec)
    vecs = [
        t.comm(x, y)
        for x in a.slice(n).rows
        for y in b.slice(n).rows
    ]
    rows = rref_low(vecs)
    return AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in rows])


def subring_closure(a, n):
    """Closure of a subgroup under multiplication, computed in a doubled window."""
    ctx = a.ctx
    if ctx.domain is POLY2:
        big = 2 * n
        rows = []
        for m in a.slice(n).basis():
            insert_high(rows, _vec_deg_major(m, big))
        while True:
            mats = [_unvec_deg_major(r, ctx) for r in rows]
            grew = False
            for x in mats:
                for y in mats:
                    p = x * y
                    if p.is_zero or max_entry_degree(p) >= big:
                        continue
                    if insert_high(rows, _vec_deg_major(p, big)):
                        grew = True
            if not grew:
                break
        kept = [_unvec_deg_major(r, ctx) for r in rows if r.bit_length() <= 4 * n]
        return _tagged_from_basis(ctx, kept, n, a.closed_under_t())
    from .finite_tables import tables

    t = tables(ctx.spec)
    rows = list(a.slice(n).rows)
    while True:
        grew = False
        snapshot = list(rows)
        for x in snapshot:
            for y in snapshot:
                if insert_low(rows, t.matmul(x, y)):
                    grew = True
        if not grew:
            break
    return AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in sorted(rows, key=lambda r: r & -r)])


def bracket_closure(seeds, l, n):
    """Smallest window subgroup containing the seeds with [A, L] inside A.

    Iterates inside the doubled window and restricts at the end, so the
    invariance holds by construction up to window boundary effects.
    """
    ctx = l.ctx
    if ctx.domain is not POLY2:
        raise ContextError("bracket closures are computed over polynomial contexts")
    big = 2 * n
    rows = []
    for m in seeds:
        if not m.is_zero:
            insert_high(rows, _vec_deg_major(m, big))
    lbasis = l.slice(n).basis()
    while True:
        grew = False
        for r in list(rows):
            x = _unvec_deg_major(r, ctx)
            for y in lbasis:
                c = commutator(x, y)
                if c.is_zero or max_entry_degree(c) >= big:
                    continue
                if insert_high(rows, _vec_deg_major(c, big)):
                    grew = True
        if not grew:
            break
    kept = [_unvec_deg_major(r, ctx) for r in rows if r.bit_length() <= 4 * n]
    return _tagged_from_basis(ctx, kept, n, l.closed_under_t())


def generated_ideal(l, n):
    """The ideal generated by [L, L], as a principal matrix ideal.

    Over GF(2)[t] every two-sided ideal of the matrix ring is M2 of an
    ideal of the (principal ideal) coefficient ring, so the ideal generated
    by the window brackets is M2(g*GF(2)[t]) with g the gcd of all their
    entries.  Returns (subgroup, g).
    """
    if l.ctx != M2_POLY2:
        raise ContextError("ideal generation is implemented over m2-poly2")
    basis = l.slice(n).basis()
    g = Poly.zero()
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            for e in commutator(x, y).e:
                g = g.gcd(e)
    return ideal_window(l.ctx, g), g


class FieldSpan:
    """Subspace of M2 over a field-scalar context, with canonical basis."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        self.ctx = ctx
        self.rows = rows

    @classmethod
    def span(cls, ctx, mats):
        if not ctx.domain.is_field:
            raise ContextError("field spans need a field-scalar context")
        rows = []
        for m in mats:
            _field_insert(rows, promote(m, ctx).e)
        return cls(ctx, tuple((p, tuple(r)) for p, r in rows))

    @classmethod
    def trace_zero(cls, ctx):
        one = Mat2.identity(ctx)
        e12 = Mat2.unit(ctx, 1, 2)
        e21 = Mat2.unit(ctx, 2, 1)
        return cls.span(ctx, [one, e12, e21])

    @classmethod
    def full(cls, ctx):
        return cls.span(ctx, [Mat2.unit(ctx, i, j) for i in (1, 2) for j in (1, 2)])

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [Mat2(self.ctx, r, check=False) for _, r in self.rows]

    def contains(self, m):
        vec = _field_reduce(self.rows, promote(m, self.ctx).e)
        return all(x.is_zero for x in vec)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpan)
            and self.ctx == other.ctx
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"FieldSpan({self.ctx.spec}, dim={self.dim})"

    def is_lie_ideal(self):
        units = [Mat2.unit(self.ctx, i, j) for i in (1, 2) for j in (1, 2)]
        return all(self.contains(commutator(b, u)) for b in self.basis() for u in units)

    def is_abelian(self):
        bs = self.basis()
        return all(commutator(x, y).is_zero for x in bs for y in bs)


def c_span(a):
    """Span of a subgroup's generators over the extended centroid."""
    cc = a.ctx.central_closure()
    return FieldSpan.span(cc, [g.element for g in a.generators])


def is_lie_ideal(l, n=8):
    """Window check that [L, R] stays inside L."""
    ctx = l.ctx
    sl = l.slice(n)
    if ctx.domain is POLY2:
        units = ring_window(ctx).generators
        t = Poly.t()
        for x in l.slice(n - 1).basis():
            dx = max_entry_degree(x)
            for g in units:
                e = g.element
                de = max_entry_degree(e)
                cur = e
                for j in range(n - dx - de):
                    c = commutator(x, cur)
                    if not c.is_zero and not sl.contains(c):
                        return False
                    cur = cur.scale(t)
        return True
    from .finite_tables import tables

    tb = tables(ctx.spec)
    return all(
        reduce_low(sl.rows, tb.comm(x, 1 << i)) == 0
        for x in sl.rows
        for i in range(tb.dim)
    )


class LieIdealClass(enum.Enum):
    CENTRAL = "central"
    ABELIAN_NONCENTRAL = "abelian-noncentral"
    TYPE_I = "type-i"
    TYPE_II = "type-ii"


def classify_lie_ideal(l, n=8):
    """Place a Lie ideal in the four-way classification.

    Noncentral Lie ideals of the exceptional 2x2 rings either are abelian
    with central-closure span C*a + C for a noncentral square-central a, or
    nonabelian with span equal to the commutator space or everything.  Any
    other shape is a falsification event, not a return value.
    """
    if not is_lie_ideal(l, n):
        raise ContextError("not a Lie ideal (within the window)")
    sp = c_span(l)
    cc = sp.ctx
    if all(is_central(b) for b in sp.basis()):
        return LieIdealClass.CENTRAL
    if bracket_subgroup(l, l, n).slice(n).is_zero:
        noncentral = [b for b in sp.basis() if not is_central(b)]
        a = noncentral[0]
        expected = FieldSpan.span(cc, [a, Mat2.identity(cc)])
        if sp.dim != 2 or sp != expected or not is_central(a * a):
            raise TheoremFalsified(
                f"abelian noncentral Lie ideal with span dim {sp.dim} over {cc.spec}"
            )
        return LieIdealClass.ABELIAN_NONCENTRAL
    if sp == FieldSpan.trace_zero(cc):
        return LieIdealClass.TYPE_I
    if sp.dim == 4:
        return LieIdealClass.TYPE_II
    raise TheoremFalsified(f"nonabelian Lie ideal with span dim {sp.dim} over {cc.spec}")


def engel_subgroup(l, m, n):
    """Additive group generated by degree-m left-normed Engel words on L."""
    if m < 1:
        raise ValueError("Engel degree starts at 1")
    e = l
    for _ in range(m - 1):
        e = bracket_subgroup(l, e, n)
    return e


def gaussian_binomial(n, k, q=2):
    """Number of k-dimensional subspaces of GF(q)^n."""
    num = den = 1
    for i in range(1, k + 1):
        num *= q ** (n - k + i) - 1
        den *= q**i - 1
    return num // den


def count_subspaces(dim):
    return sum(gaussian_binomial(dim, k) for k in range(dim + 1))


def iter_subspace_bases(dim):
    """All subspaces of GF(2)^dim as low-pivot reduced bases, smallest first."""
    yield ()
    for k in range(1, dim + 1):
        for pivots in combinations(range(dim), k):
            pivset = set(pivots)
            free = [[c for c in range(p + 1, dim) if c not in pivset] for p in pivots]
            counts = [len(f) for f in free]
            total = sum(counts)
            for mask in range(1 << total):
                rows = []
                off = 0
                for i, p in enumerate(pivots):
                    r = 1 << p
                    sub = mask >> off
                    for c in free[i]:
                        if sub & 1:
                            r |= 1 << c
                        sub >>= 1
                    rows.append(r)
                    off += counts[i]
                yield tuple(rows)


def enumerate_subspaces(ctx):
    """All additive subgroups of a finite context, as subgroup objects."""
    from .finite_tables import tables

    t = tables(ctx.spec)
    for rows in iter_subspace_bases(t.dim):
        yield AdditiveSubgroup.from_elements(ctx, [t.mat_of(r) for r in rows])


def parse_generator_line(line, ctx):
    """Parse one generator-file line: ``bits M``, ``poly-full M``, ``poly-ideal g M``."""
    parts = line.split(None, 1)
    if len(parts) != 2:
        raise ValueError(f"bad generator line {line!r}")
    kind, rest = parts
    if kind == "poly-ideal":
        sub = rest.split(None, 1)
        if len(sub) != 2:
            raise ValueError(f"poly-ideal line needs a polynomial and a matrix: {line!r}")
        g = Poly.parse(sub[0])
        return TaggedGenerator(parse_matrix(sub[1], ctx), "poly-ideal", g)
    if kind not in ("bits", "poly-full"):
        raise ValueError(f"unknown generator kind {kind!r}")
    return TaggedGenerator(parse_matrix(rest, ctx), kind)


def parse_generator_file(text, ctx):
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            gens.append(parse_generator_line(line, ctx))
    return AdditiveSubgroup(ctx, gens)
