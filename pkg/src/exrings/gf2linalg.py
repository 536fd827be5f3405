"""GF(2) linear algebra on integer bit-vectors.

A vector is a nonnegative int; bit i is coordinate i.  Addition is XOR.
Two reduced-echelon conventions are provided: pivots at the lowest set bit
(the canonical public form, coordinates processed in ascending order) and
pivots at the highest set bit (used internally where a coordinate prefix
must be split off, e.g. restricting a wide-window span to a narrower one).

In either convention a basis kept fully reduced has each pivot bit present
in exactly one row, so reduction is a single pass in any row order, and
the reduced basis of a subspace is unique.
"""

from __future__ import annotations


def reduce_low(rows, v):
    """Reduce v against low-pivot reduced rows."""
    for r in rows:
        if v & (r & -r):
            v ^= r
    return v


def insert_low(rows, v):
    """Insert v into a low-pivot reduced basis (a list); returns True if it grew."""
    v = reduce_low(rows, v)
    if not v:
        return False
    p = v & -v
    for i, r in enumerate(rows):
        if r & p:
            rows[i] = r ^ v
    rows.append(v)
    rows.sort(key=lambda r: r & -r)
    return True


def rref_low(vectors):
    """Canonical low-pivot reduced basis of the span of the given vectors."""
    rows = []
    for v in vectors:
        insert_low(rows, v)
    return tuple(rows)


def reduce_high(rows, v):
    """Reduce v against high-pivot reduced rows."""
    for r in rows:
        if v >> (r.bit_length() - 1) & 1:
            v ^= r
    return v


def insert_high(rows, v):
    v = reduce_high(rows, v)
    if not v:
        return False
    p = v.bit_length() - 1
    for i, r in enumerate(rows):
        if r >> p & 1:
            rows[i] = r ^ v
    rows.append(v)
    rows.sort(key=lambda r: -r.bit_length())
    return True


def rref_high(vectors):
    rows = []
    for v in vectors:
        insert_high(rows, v)
    return tuple(rows)


def span_equal(rows_a, rows_b):
    """Spans given by reduced bases are equal iff the bases match as sets."""
    return sorted(rows_a) == sorted(rows_b)
