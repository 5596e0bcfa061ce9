"""Exact arithmetic in the real cyclotomic fields Q(2*cos(pi/N)) and in
quadratic extensions of them.

Base-field elements are tuples of Fractions: coordinates in the power basis of
c = 2*cos(pi/N). An extension element carries two such tuples and stands for
a + b*th where th*th is a fixed base element. Everything is exact; floats show
up only in sanity checks and in the square-root search, whose results are
verified exactly before use.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .errors import BadInput, DivisionByZero, FieldError

# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, constant term first)


def _imul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _idiv_exact(p: list[int], q: list[int]) -> list[int]:
    p = p[:]
    dq = len(q) - 1
    lead = q[-1]
    out = [0] * (len(p) - dq)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i]
        if c == 0:
            continue
        if c % lead:
            raise ArithmeticError("integer polynomial division is not exact")
        f = c // lead
        out[i - dq] = f
        for j in range(dq + 1):
            p[i - dq + j] -= f * q[j]
    if any(p):
        raise ArithmeticError("integer polynomial division is not exact")
    return out


def _ftrim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _fmul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _fsub(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = list(p) + [Fraction(0)] * (len(q) - len(p))
    for i, b in enumerate(q):
        out[i] -= b
    return _ftrim(out)


def _fdivmod(p: list[Fraction], q: list[Fraction]):
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(p) < len(q):
        return [], _ftrim(p)
    out = [Fraction(0)] * (len(p) - dq)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i]
        if c:
            f = c / lead
            out[i - dq] = f
            for j in range(dq + 1):
                p[i - dq + j] -= f * q[j]
    return _ftrim(out), _ftrim(p[:dq])


def _ext_gcd_poly(a: list[Fraction], m: list[Fraction]):
    """Return (g, u) with u*a congruent to g modulo m, g the gcd."""
    old_r, r = _ftrim(list(a)), _ftrim(list(m))
    old_u: list[Fraction] = [Fraction(1)]
    u: list[Fraction] = []
    while r:
        q, rem = _fdivmod(old_r, r)
        old_r, r = r, rem
        old_u, u = u, _fsub(old_u, _fmul(q, u))
    return old_r, old_u


# ---------------------------------------------------------------------------
# cyclotomic data


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise BadInput("cyclotomic index must be positive")
    if n == 1:
        return (-1, 1)
    num = [0] * n + [1]
    num[0] = -1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _imul(den, list(cyclotomic_poly(d)))
    return tuple(_idiv_exact(num, den))


@lru_cache(maxsize=None)
def minpoly_cos(n: int) -> tuple[Fraction, ...]:
    """Minimal polynomial of 2*cos(pi/n) over Q, monic, constant term first.

    Computed by expanding the product of (x - (z^k + z^-k)) over the k in
    (0, n) coprime to 2n, with z a primitive 2n-th root of unity; the
    expansion runs exactly in Z[y] modulo the 2n-th cyclotomic polynomial.
    """
    if n < 1:
        raise BadInput("n must be a positive integer")
    if n == 1:
        return (Fraction(2), Fraction(1))
    phi = list(cyclotomic_poly(2 * n))
    d = len(phi) - 1

    def red(p: list[int]) -> tuple[int, ...]:
        for i in range(len(p) - 1, d - 1, -1):
            c = p[i]
            if c:
                for j in range(d + 1):
                    p[i - d + j] -= c * phi[j]
        out = p[:d]
        out.extend([0] * (d - len(out)))
        return tuple(out)

    zero = tuple([0] * d)

    def radd(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def rsub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def rmul(a, b):
        return red(_imul(list(a), list(b)))

    def ypow(k: int):
        return red([0] * k + [1])

    ks = [k for k in range(1, n) if math.gcd(k, 2 * n) == 1]
    prod = [red([1])]
    for k in ks:
        ck = radd(ypow(k), ypow(2 * n - k))
        new = [zero] * (len(prod) + 1)
        for i, co in enumerate(prod):
            new[i + 1] = radd(new[i + 1], co)
            new[i] = rsub(new[i], rmul(co, ck))
        prod = new

    coeffs = []
    for co in prod:
        if any(co[1:]):
            raise FieldError("conjugate product did not collapse to Q")
        coeffs.append(Fraction(co[0]))
    if coeffs[-1] != 1:
        raise FieldError("minimal polynomial is not monic")
    x = 2.0 * math.cos(math.pi / n)
    val = 0.0
    for c in reversed(coeffs):
        val = val * x + float(c)
    if abs(val) > 1e-8:
        raise FieldError("minimal polynomial failed its numeric check")
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# base field


class CycloBase:
    """The totally real field Q(c), c = 2*cos(pi/n).

    Elements are coordinate tuples of length `degree` in the power basis
    1, c, ..., c^(degree-1). The class carries all real embeddings; index 0
    sends c to 2*cos(pi/n) itself.
    """

    def __init__(self, n: int):
        self.n = n
        self.minpoly = minpoly_cos(n)
        self.degree = len(self.minpoly) - 1
        if n == 1:
            ks = [1]
        else:
            ks = [k for k in range(1, n) if math.gcd(k, 2 * n) == 1]
        self.embeddings = tuple(2.0 * math.cos(k * math.pi / n) for k in ks)
        self._zero = tuple([Fraction(0)] * self.degree)
        one = [Fraction(0)] * self.degree
        one[0] = Fraction(1)
        self._one = tuple(one)

    def __eq__(self, other):
        return isinstance(other, CycloBase) and other.n == self.n

    def __hash__(self):
        return hash(("CycloBase", self.n))

    def __repr__(self):
        return f"CycloBase(n={self.n}, degree={self.degree})"

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def from_rational(self, x) -> tuple:
        t = [Fraction(0)] * self.degree
        t[0] = Fraction(x)
        return tuple(t)

    def gen(self) -> tuple:
        """The generator c as an element."""
        if self.degree == 1:
            return (-self.minpoly[0],)
        t = [Fraction(0)] * self.degree
        t[1] = Fraction(1)
        return tuple(t)

    def _reduce(self, p: list[Fraction]) -> tuple:
        d = self.degree
        m = self.minpoly
        for i in range(len(p) - 1, d - 1, -1):
            c = p[i]
            if c:
                for j in range(d + 1):
                    p[i - d + j] -= c * m[j]
        out = p[:d]
        out.extend([Fraction(0)] * (d - len(out)))
        return tuple(out)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        return self._reduce(_fmul(list(a), list(b)))

    def is_zero(self, a) -> bool:
        return not any(a)

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero("inverse of zero in the base field")
        g, u = _ext_gcd_poly(list(a), list(self.minpoly))
        if len(g) != 1:
            raise FieldError("element is a zero divisor; base polynomial not irreducible?")
        c = g[0]
        out = [x / c for x in u]
        out.extend([Fraction(0)] * (self.degree - len(out)))
        return tuple(out[: self.degree])

    def embed(self, a, j: int = 0) -> float:
        x = self.embeddings[j]
        val = 0.0
        for c in reversed(a):
            val = val * x + float(c)
        return val

    def fmt(self, a) -> str:
        terms = []
        for i in range(self.degree - 1, -1, -1):
            co = a[i]
            if co == 0:
                continue
            if i == 0:
                body = str(abs(co))
            else:
                var = "c" if i == 1 else f"c^{i}"
                mag = abs(co)
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if co < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def two_cos(base: CycloBase, j: int) -> tuple:
    """2*cos(j*pi/n) as an exact element of the base field."""
    if j < 0:
        j = -j
    e0 = base.from_rational(2)
    if j == 0:
        return e0
    c = base.gen()
    prev, cur = e0, c
    for _ in range(j - 1):
        prev, cur = cur, base.sub(base.mul(c, cur), prev)
    return cur


# ---------------------------------------------------------------------------
# square roots in the base


def _solve_vandermonde(xs, vals):
    d = len(xs)
    m = [[xs[j] ** i for i in range(d)] + [vals[j]] for j in range(d)]
    for col in range(d):
        piv = max(range(col, d), key=lambda r: abs(m[r][col]))
        if abs(m[piv][col]) < 1e-12:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(d):
            if r != col:
                f = m[r][col] / m[col][col]
                for k in range(col, d + 1):
                    m[r][k] -= f * m[col][k]
    return [m[i][d] / m[i][i] for i in range(d)]


def sqrt_in_base(base: CycloBase, t) -> tuple | None:
    """An exact y with y*y == t, or None when no square root exists in the base.

    The base is totally real, so a negative value at any real embedding rules
    a root out for certain. Otherwise candidate roots are reconstructed from
    the embeddings (one sign pattern at a time) and verified exactly; a
    non-None return is therefore always correct.
    """
    if base.is_zero(t):
        return base.zero()
    embs = [base.embed(t, j) for j in range(base.degree)]
    scale = max(1.0, max(abs(v) for v in embs))
    if min(embs) < -1e-9 * scale:
        return None
    d = base.degree
    roots = [math.sqrt(max(v, 0.0)) for v in embs]
    cs = list(base.embeddings)
    for signs in itertools.product((1.0, -1.0), repeat=d - 1):
        vals = [roots[0]] + [s * r for s, r in zip(signs, roots[1:])]
        coeffs = _solve_vandermonde(cs, vals)
        if coeffs is None:
            continue
        for bound in (10**6, 10**12):
            cand = tuple(Fraction(x).limit_denominator(bound) for x in coeffs)
            if base.mul(cand, cand) == tuple(Fraction(v) for v in t):
                return cand
    return None


# ---------------------------------------------------------------------------
# the working field (base, possibly extended by one square root)


class Field:
    """Arithmetic domain for one parameter system.

    Either the base field itself (ncomp == 1) or a quadratic extension by an
    element th with th*th = gen_square (ncomp == 2). The constructor trusts
    the caller that gen_square is not a square in the base; make_field checks.
    """

    def __init__(self, base: CycloBase, gen_square=None):
        if gen_square is not None and base.is_zero(gen_square):
            raise BadInput("extension by the square root of zero is not a field")
        self.base = base
        self.gen_square = gen_square
        self.ncomp = 1 if gen_square is None else 2
        if gen_square is not None:
            self._gen_embeds = tuple(
                cmath.sqrt(complex(base.embed(gen_square, j)))
                for j in range(base.degree)
            )

    def same_structure(self, other: "Field") -> bool:
        return self.base.n == other.base.n and self.gen_square == other.gen_square

    def __repr__(self):
        if self.ncomp == 1:
            return f"Field(n={self.base.n})"
        return f"Field(n={self.base.n}, th^2={self.base.fmt(self.gen_square)})"

    def zero(self) -> "FieldElem":
        return self.from_base(self.base.zero())

    def one(self) -> "FieldElem":
        return self.from_base(self.base.one())

    def from_rational(self, x) -> "FieldElem":
        return self.from_base(self.base.from_rational(x))

    def from_base(self, t) -> "FieldElem":
        if self.ncomp == 1:
            return FieldElem(self, (tuple(t),))
        return FieldElem(self, (tuple(t), self.base.zero()))

    def c(self) -> "FieldElem":
        """The base generator 2*cos(pi/n) as a field element."""
        return self.from_base(self.base.gen())

    def gen(self) -> "FieldElem":
        """The extension generator th. Error when the field is the base itself."""
        if self.ncomp == 1:
            raise FieldError("field has no extension generator")
        return FieldElem(self, (self.base.zero(), self.base.one()))

    def fmt(self, x: "FieldElem") -> str:
        if self.ncomp == 1:
            return self.base.fmt(x.parts[0])
        a, b = x.parts
        if self.base.is_zero(b):
            return self.base.fmt(a)
        bs = self.base.fmt(b)
        bpart = "th" if bs == "1" else f"({bs})*th"
        if self.base.is_zero(a):
            return bpart
        return f"({self.base.fmt(a)}) + {bpart}"


class FieldElem:
    """One exact field value; supports +, -, *, /, ** and mixes with int and
    Fraction operands."""

    __slots__ = ("field", "parts")

    def __init__(self, field: Field, parts):
        self.field = field
        self.parts = parts

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is self.field or other.field.same_structure(self.field):
                return other
            if other.field.ncomp == 1 and other.field.base.n == self.field.base.n:
                return FieldElem(self.field, (other.parts[0], self.field.base.zero()))
            return None
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        b = self.field.base
        return FieldElem(self.field, tuple(b.add(x, y) for x, y in zip(self.parts, o.parts)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        b = self.field.base
        return FieldElem(self.field, tuple(b.sub(x, y) for x, y in zip(self.parts, o.parts)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        b = self.field.base
        return FieldElem(self.field, tuple(b.neg(x) for x in self.parts))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        b = self.field.base
        if self.field.ncomp == 1:
            return FieldElem(self.field, (b.mul(self.parts[0], o.parts[0]),))
        a0, a1 = self.parts
        b0, b1 = o.parts
        e = self.field.gen_square
        re = b.add(b.mul(a0, b0), b.mul(b.mul(a1, b1), e))
        im = b.add(b.mul(a0, b1), b.mul(a1, b0))
        return FieldElem(self.field, (re, im))

    __rmul__ = __mul__

    def inv(self) -> "FieldElem":
        b = self.field.base
        if self.field.ncomp == 1:
            return FieldElem(self.field, (b.inv(self.parts[0]),))
        a0, a1 = self.parts
        norm = b.sub(b.mul(a0, a0), b.mul(b.mul(a1, a1), self.field.gen_square))
        if b.is_zero(norm):
            if not self:
                raise DivisionByZero("inverse of zero")
            raise FieldError("zero divisor: the extension square is a square in the base")
        ninv = b.inv(norm)
        return FieldElem(self.field, (b.mul(a0, ninv), b.neg(b.mul(a1, ninv))))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one()
        b = self
        k = n
        while k:
            if k & 1:
                out = out * b
            b = b * b
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElem):
                return False
            return NotImplemented
        return self.parts == o.parts

    def __hash__(self):
        return hash((self.field.base.n, self.field.gen_square, self.parts))

    def __bool__(self):
        return any(any(p) for p in self.parts)

    def sigma(self) -> "FieldElem":
        """The conjugation that negates the extension generator (identity on
        a plain base field)."""
        if self.field.ncomp == 1:
            return self
        a, b = self.parts
        return FieldElem(self.field, (a, self.field.base.neg(b)))

    def embed(self, j: int = 0) -> complex:
        """Numeric value at the j-th real embedding of the base (the
        extension root takes its principal square-root branch)."""
        b = self.field.base
        val = complex(b.embed(self.parts[0], j))
        if self.field.ncomp == 2:
            val += complex(b.embed(self.parts[1], j)) * self.field._gen_embeds[j]
        return val

    def is_rational(self) -> bool:
        if self.field.ncomp == 2 and any(self.parts[1]):
            return False
        return not any(self.parts[0][1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise FieldError("element is not rational")
        return self.parts[0][0]

    def base_part(self):
        """Coordinates over the base: (a, b) tuples with value a + b*th."""
        if self.field.ncomp == 1:
            return self.parts[0], self.field.base.zero()
        return self.parts

    def __repr__(self):
        return self.field.fmt(self)


def sqrt_in_field(field: Field, t) -> FieldElem | None:
    """An x in the field with x*x equal to the base element t, or None."""
    y = sqrt_in_base(field.base, t)
    if y is not None:
        return field.from_base(y)
    if field.ncomp == 2:
        ratio = field.base.mul(t, field.base.inv(field.gen_square))
        u = sqrt_in_base(field.base, ratio)
        if u is not None:
            return field.from_base(u) * field.gen()
    return None


def make_field(n: int, ext_square=None) -> Field:
    """Build the working field for lcm value n.

    ext_square, when given, is a base element (or rational) to adjoin a square
    root of; it is rejected if it already is a square in the base.
    """
    base = CycloBase(n)
    if ext_square is None:
        return Field(base)
    if isinstance(ext_square, (int, Fraction)):
        ext_square = base.from_rational(ext_square)
    if sqrt_in_base(base, ext_square) is not None:
        raise BadInput("requested extension square is already a square in the base")
    return Field(base, tuple(ext_square))
