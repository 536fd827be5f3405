"""Exact scalar arithmetic for the matrix workbench.

Five scalar levels are supported:

* GF(2) and GF(3), the prime fields, as ``F2`` / ``F3`` values;
* GF(4) = GF(2)[u]/(u^2+u+1) as ``F4`` values;
* the polynomial ring GF(2)[t] as ``Poly`` values;
* its fraction field GF(2)(t) as ``Rat`` values.

Polynomials over GF(2) are stored as nonnegative Python integers: bit i of
the integer is the coefficient of t^i.  The zero polynomial is the integer
0, and the no-trailing-zero canonical form is automatic, so equality of
polynomials is plain integer equality.  Addition is XOR.

Rational functions are gcd-reduced pairs of such integers.  Every nonzero
polynomial over GF(2) is monic, so the reduced form needs no further
normalization and is canonical as well.

Each level has a module-level domain singleton (``GF2``, ``GF3``, ``GF4``,
``POLY2``, ``RAT2``) bundling constructors, parsing, uniform random
sampling, and iteration where the level is finite.
"""

from __future__ import annotations

import re

from .errors import ContextError


class Fp:
    """Prime field element; subclasses fix the modulus ``p``."""

    __slots__ = ("v",)
    p = 0

    def __init__(self, v):
        self.v = v % self.p

    @property
    def is_zero(self):
        return self.v == 0

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        return type(self) is type(other) and self.v == other.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __add__(self, other):
        self._check(other)
        return type(self)(self.v + other.v)

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.v - other.v)

    def __neg__(self):
        return type(self)(-self.v)

    def __mul__(self, other):
        self._check(other)
        return type(self)(self.v * other.v)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero")
        return type(self)(pow(self.v, self.p - 2, self.p))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def _check(self, other):
        if type(self) is not type(other):
            raise TypeError(f"mixed scalar types: {type(self).__name__} and {type(other).__name__}")

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"{type(self).__name__}({self.v})"


class F2(Fp):
    p = 2


class F3(Fp):
    p = 3


class F4:
    """GF(4) element a+b*u with u^2 = u+1, packed as code = a | (b << 1)."""

    __slots__ = ("code",)

    _MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))
    _INV = (0, 1, 3, 2)
    _STR = ("0", "1", "u", "u+1")

    def __init__(self, code):
        if not 0 <= code <= 3:
            raise ValueError("GF(4) code out of range")
        self.code = code

    @property
    def is_zero(self):
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        return type(other) is F4 and self.code == other.code

    def __hash__(self):
        return hash(("F4", self.code))

    def __add__(self, other):
        return F4(self.code ^ other.code)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return F4(self._MUL[self.code][other.code])

    def inverse(self):
        if self.code == 0:
            raise ZeroDivisionError("inverse of zero")
        return F4(self._INV[self.code])

    def __truediv__(self, other):
        return self * other.inverse()

    def __str__(self):
        return self._STR[self.code]

    def __repr__(self):
        return f"F4({self.code})"


def _pdivmod(a, b):
    """Long division of GF(2)[t] bit masks; returns (quotient, remainder)."""
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _pmul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


_POLY_TERM = re.compile(r"^(?:t\^(\d+)|t|1|0)$")


class Poly:
    """Polynomial over GF(2), stored as an integer bit mask."""

    __slots__ = ("bits",)

    def __init__(self, bits=0):
        if not isinstance(bits, int) or bits < 0:
            raise ValueError("bit mask must be a nonnegative integer")
        self.bits = bits

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def t(cls):
        return cls(2)

    @classmethod
    def monomial(cls, k):
        return cls(1 << k)

    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from a low-to-high GF(2) coefficient sequence."""
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    def coeffs(self):
        """Low-to-high coefficient tuple in canonical (no trailing zero) form."""
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    @property
    def is_zero(self):
        return self.bits == 0

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        return type(other) is Poly and self.bits == other.bits

    def __hash__(self):
        return hash(("Poly", self.bits))

    def __add__(self, other):
        if type(other) is not Poly:
            return NotImplemented
        return Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if type(other) is not Poly:
            return NotImplemented
        return Poly(_pmul(self.bits, other.bits))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = 1, self.bits
        while n:
            if n & 1:
                out = _pmul(out, base)
            base = _pmul(base, base)
            n >>= 1
        return Poly(out)

    def __divmod__(self, other):
        q, r = _pdivmod(self.bits, other.bits)
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Exact division; raises if the divisor does not divide exactly."""
        q, r = divmod(self, other)
        if r.bits:
            raise ValueError(f"inexact polynomial division: {self} by {other}")
        return q

    def gcd(self, other):
        a, b = self.bits, other.bits
        while b:
            a, b = b, _pdivmod(a, b)[1]
        return Poly(a)

    def derivative(self):
        """Formal derivative: odd-degree coefficients drop one degree, the rest vanish."""
        m = self.bits >> 1
        mask = (4 ** (m.bit_length() // 2 + 1) - 1) // 3  # ...010101 in binary
        return Poly(m & mask)

    def __str__(self):
        if self.bits == 0:
            return "0"
        terms = []
        for i in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "t" if i == 1 else f"t^{i}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly({bin(self.bits)})"

    @classmethod
    def parse(cls, text):
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        bits = 0
        for term in s.split("+"):
            m = _POLY_TERM.match(term)
            if not m:
                raise ValueError(f"bad polynomial term {term!r} in {text!r}")
            if term == "0":
                continue
            k = 0 if term == "1" else 1 if term == "t" else int(m.group(1))
            bits ^= 1 << k
        return cls(bits)


class Rat:
    """Reduced fraction of GF(2)[t] polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, Rat):
            if den is not None:
                raise ValueError("Rat(num, den) expects polynomials")
            num, den = num.num, num.den
        if den is None:
            den = Poly.one()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = Poly.one()
        else:
            g = num.gcd(den)
            if g.bits != 1:
                num, den = num / g, den / g
        self.num = num
        self.den = den

    @classmethod
    def zero(cls):
        return cls(Poly.zero())

    @classmethod
    def one(cls):
        return cls(Poly.one())

    @classmethod
    def t(cls):
        return cls(Poly.t())

    @staticmethod
    def _coerce(x):
        if isinstance(x, Rat):
            return x
        if isinstance(x, Poly):
            return Rat(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Rat")

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        return type(other) is Rat and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("Rat", self.num.bits, self.den.bits))

    def __add__(self, other):
        other = self._coerce(other)
        return Rat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        return Rat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational")
        return Rat(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return Rat(self.den, self.num)

    def derivative(self):
        """Quotient rule; char 2 turns the numerator into n'd + nd'."""
        n, d = self.num, self.den
        return Rat(n.derivative() * d + n * d.derivative(), d * d)

    def __str__(self):
        if self.den.bits == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"Rat({self.num!r}, {self.den!r})"

    @classmethod
    def parse(cls, text):
        s = text.replace(" ", "")
        m = re.fullmatch(r"\((.+)\)/\((.+)\)", s)
        if m:
            return cls(Poly.parse(m.group(1)), Poly.parse(m.group(2)))
        return cls(Poly.parse(s))


class ScalarDomain:
    """Constructors, parsing, sampling, and iteration for one scalar level."""

    name = ""
    char = 0
    is_field = True
    is_finite = True

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def sample(self, rng, degree_bound=4):
        raise NotImplementedError

    def elements(self):
        raise ContextError(f"{self.name} is not finite")

    def fraction_field(self):
        return self

    def __repr__(self):
        return f"<domain {self.name}>"


class _DomainGF2(ScalarDomain):
    name, char = "gf2", 2

    def zero(self):
        return F2(0)

    def one(self):
        return F2(1)

    def parse(self, text):
        if text.strip() not in ("0", "1"):
            raise ValueError(f"bad GF(2) scalar {text!r}")
        return F2(int(text))

    def sample(self, rng, degree_bound=4):
        return F2(rng.randrange(2))

    def elements(self):
        return [F2(0), F2(1)]


class _DomainGF3(ScalarDomain):
    name, char = "gf3", 3

    def zero(self):
        return F3(0)

    def one(self):
        return F3(1)

    def parse(self, text):
        if text.strip() not in ("0", "1", "2"):
            raise ValueError(f"bad GF(3) scalar {text!r}")
        return F3(int(text))

    def sample(self, rng, degree_bound=4):
        return F3(rng.randrange(3))

    def elements(self):
        return [F3(0), F3(1), F3(2)]


class _DomainGF4(ScalarDomain):
    name, char = "gf4", 2

    _PARSE = {"0": 0, "1": 1, "u": 2, "u+1": 3, "1+u": 3}

    def zero(self):
        return F4(0)

    def one(self):
        return F4(1)

    def u(self):
        return F4(2)

    def parse(self, text):
        key = text.replace(" ", "")
        if key not in self._PARSE:
            raise ValueError(f"bad GF(4) scalar {text!r}")
        return F4(self._PARSE[key])

    def sample(self, rng, degree_bound=4):
        return F4(rng.randrange(4))

    def elements(self):
        return [F4(c) for c in range(4)]


class _DomainPoly2(ScalarDomain):
    name, char = "poly2", 2
    is_field = False
    is_finite = False

    def zero(self):
        return Poly.zero()

    def one(self):
        return Poly.one()

    def parse(self, text):
        return Poly.parse(text)

    def sample(self, rng, degree_bound=4):
        return Poly(rng.getrandbits(degree_bound + 1))

    def fraction_field(self):
        return RAT2


class _DomainRat2(ScalarDomain):
    name, char = "rat2", 2
    is_finite = False

    def zero(self):
        return Rat.zero()

    def one(self):
        return Rat.one()

    def parse(self, text):
        return Rat.parse(text)

    def sample(self, rng, degree_bound=4):
        num = Poly(rng.getrandbits(degree_bound + 1))
        den = Poly.zero()
        while den.is_zero:
            den = Poly(rng.getrandbits(degree_bound + 1))
        return Rat(num, den)


GF2 = _DomainGF2()
GF3 = _DomainGF3()
GF4 = _DomainGF4()
POLY2 = _DomainPoly2()
RAT2 = _DomainRat2()

DOMAINS = {d.name: d for d in (GF2, GF3, GF4, POLY2, RAT2)}


def lift_to_fraction(x):
    """View a scalar inside the fraction field of its level (identity on fields)."""
    if isinstance(x, Poly):
        return Rat(x)
    return x
