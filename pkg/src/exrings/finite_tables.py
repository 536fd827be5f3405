"""Integer-coded fast path for the finite contexts M2(GF(2)) and M2(GF(4)).

A matrix is coded entry-major into 4*W bits, where W is the GF(2)-dimension
of the scalar field (1 or 2): code = e11 | e12 << W | e21 << 2W | e22 << 3W,
each entry coded as its GF(2)-coordinate bits.  Matrix addition is then XOR,
so additive subgroups are GF(2)-subspaces of the code space, and the full
multiplication table fits comfortably in memory (256 and 65536 entries).
"""

from __future__ import annotations

from functools import cache

from .errors import ContextError
from .gf2linalg import reduce_low, rref_low
from .matrices import CONTEXTS, Mat2
from .scalars import F2, F4

_F4_MUL = F4._MUL


class FiniteTables:
    """Cached code arithmetic for one finite context."""

    def __init__(self, spec):
        if spec not in ("m2-gf2", "m2-gf4"):
            raise ContextError(f"no integer fast path for {spec}")
        self.spec = spec
        self.ctx = CONTEXTS[spec]
        self.width = 1 if spec == "m2-gf2" else 2
        self.dim = 4 * self.width
        self.n = 1 << self.dim

        w, mask = self.width, (1 << self.width) - 1
        if w == 1:
            emul = ((0, 0), (0, 1))
        else:
            emul = _F4_MUL
        n = self.n
        mul = [0] * (n * n)
        for x in range(n):
            a, b = x & mask, (x >> w) & mask
            c, d = (x >> 2 * w) & mask, (x >> 3 * w) & mask
            row = x * n
            for y in range(n):
                p, q = y & mask, (y >> w) & mask
                r, s = (y >> 2 * w) & mask, (y >> 3 * w) & mask
                mul[row + y] = (
                    (emul[a][p] ^ emul[b][r])
                    | (emul[a][q] ^ emul[b][s]) << w
                    | (emul[c][p] ^ emul[d][r]) << 2 * w
                    | (emul[c][q] ^ emul[d][s]) << 3 * w
                )
        self.mul = mul

        self.identity_code = 1 | 1 << 3 * w
        self.scalar_codes = tuple(c | c << 3 * w for c in range(1 << w))
        center = 0
        for c in self.scalar_codes:
            center |= 1 << c
        self.center_mask = center
        self.center_rows = rref_low([c | c << 3 * w for c in range(1, 1 << w)])

        tz = 0
        for x in range(n):
            if (x & mask) == ((x >> 3 * w) & mask):
                tz |= 1 << x
        self.trace_zero_mask = tz
        self.sl2_rows = rref_low(
            [s << w for s in range(1, 1 << w)]
            + [s << 2 * w for s in range(1, 1 << w)]
            + [s | s << 3 * w for s in range(1, 1 << w)]
        )

        # Brackets are biadditive, so commutators of basis codes span the
        # same additive group as commutators of all code pairs.
        self.comm_span_rows = rref_low(
            [self.comm(a, b) for a in self.basis_codes() for b in self.basis_codes()]
        )

    def matmul(self, x, y):
        return self.mul[x * self.n + y]

    def comm(self, x, y):
        m = self.mul
        return m[x * self.n + y] ^ m[y * self.n + x]

    def code_of(self, m):
        w = self.width
        if w == 1:
            vals = [e.v for e in m.e]
        else:
            vals = [e.code for e in m.e]
        return vals[0] | vals[1] << w | vals[2] << 2 * w | vals[3] << 3 * w

    def mat_of(self, code):
        w, mask = self.width, (1 << self.width) - 1
        mk = (lambda c: F2(c)) if w == 1 else (lambda c: F4(c))
        return Mat2(
            self.ctx,
            (
                mk(code & mask),
                mk((code >> w) & mask),
                mk((code >> 2 * w) & mask),
                mk((code >> 3 * w) & mask),
            ),
            check=False,
        )

    def basis_codes(self):
        """GF(2)-basis of the full code space: single-bit codes."""
        return [1 << i for i in range(self.dim)]

    def is_central_code(self, x):
        return self.center_mask >> x & 1


@cache
def tables(spec):
    return FiniteTables(spec)


def span_contains_code(rows, code):
    return reduce_low(rows, code) == 0
