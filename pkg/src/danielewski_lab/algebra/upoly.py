"""Dense univariate polynomials over QQ or GF(p), Laurent polynomials, roots.

A :class:`UniPoly` stores its coefficients as a tuple indexed by degree with
no trailing zeros, so the zero polynomial is the empty tuple and structural
equality is mathematical equality.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import NamedTuple

from ..errors import FieldMismatch
from .fields import QQ, ModP, multiplicative_order

_EXHAUSTIVE_LIMIT = 2000


class UniPoly:
    """Polynomial in one variable with exact coefficients."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=QQ):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def _raw(cls, coeffs, field):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        p.field = field
        return p

    @classmethod
    def zero(cls, field=QQ):
        return cls._raw((), field)

    @classmethod
    def one(cls, field=QQ):
        return cls._raw((field.one,), field)

    @classmethod
    def x(cls, field=QQ):
        return cls._raw((field.zero, field.one), field)

    @classmethod
    def constant(cls, c, field=QQ):
        return cls._raw((field(c),), field)

    @classmethod
    def monomial(cls, c, k: int, field=QQ):
        return cls._raw([field.zero] * k + [field(c)], field)

    @classmethod
    def from_roots(cls, roots, field=QQ):
        """Monic polynomial ``prod (t - root)``."""
        out = cls.one(field)
        for r in roots:
            out = out * cls._raw((-field(r), field.one), field)
        return out

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (``-1`` for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, ModP)):
            return self == UniPoly.constant(other, self.field)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({self})"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            parts.append(_term_str(c, mono))
        return _join_terms(parts)

    __str__ = to_str

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction, ModP)):
            return UniPoly._raw((self.field(other),), self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly.zero(self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        inv = self.field.one / o.lc
        quo = [self.field.zero] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv
            quo[k] = c
            if c:
                for j, cb in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * cb
        return UniPoly._raw(quo, self.field), UniPoly._raw(rem[:db] if db > 0 else [], self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, c):
        """Divide by a scalar."""
        inv = self.field.one / self.field(c)
        return UniPoly._raw([a * inv for a in self.coeffs], self.field)

    def __call__(self, v):
        """Horner evaluation; ``v`` may be a scalar or any ring element."""
        if not self.coeffs:
            return v * 0 if not isinstance(v, (int, Fraction, ModP)) else self.field.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * v + c
        if isinstance(acc, (int, Fraction, ModP)):
            return self.field(acc)
        return acc

    # -- derived polynomials -----------------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * k for k, c in enumerate(self.coeffs)][1:], self.field)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self / self.lc

    def scale(self, a) -> "UniPoly":
        """The polynomial ``p(a*x)``."""
        a = self.field(a)
        out, pw = [], self.field.one
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * a
        return UniPoly._raw(out, self.field)

    def truncate(self, n: int) -> "UniPoly":
        """Reduction modulo ``x**n``."""
        return UniPoly._raw(self.coeffs[:n], self.field)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``x**k`` (``k >= 0``) or drop ``-k`` low coefficients."""
        if k >= 0:
            return UniPoly._raw([self.field.zero] * k + list(self.coeffs), self.field)
        return UniPoly._raw(self.coeffs[-k:], self.field)

    def mul_trunc(self, other: "UniPoly", n: int) -> "UniPoly":
        a, b = self.coeffs[:n], other.coeffs[:n]
        out = [self.field.zero] * min(n, max(len(a) + len(b) - 1, 0))
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j in range(min(len(b), n - i)):
                out[i + j] = out[i + j] + ca * b[j]
        return UniPoly._raw(out, self.field)


def _term_str(c, mono: str) -> str:
    s = str(c)
    if not mono:
        return s
    if s == "1":
        return mono
    if s == "-1":
        return "-" + mono
    if "/" in s or (s.startswith("-") is False and "+" in s):
        return f"({s})*{mono}"
    return f"{s}*{mono}"


def _join_terms(parts) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def powmod(base: UniPoly, e: int, mod: UniPoly) -> UniPoly:
    result = UniPoly.one(base.field) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        e >>= 1
        if e:
            base = (base * base) % mod
    return result


def series_inverse(u: UniPoly, n: int) -> UniPoly:
    """Inverse of ``u`` modulo ``x**n``; requires ``u(0) != 0``."""
    if not u[0]:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv = UniPoly.constant(u.field.one / u[0], u.field)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        # Newton step: inv <- inv * (2 - u*inv)
        e = u.mul_trunc(inv, prec)
        inv = inv.mul_trunc(UniPoly.constant(2, u.field) - e, prec)
    return inv.truncate(n)


class LaurentPoly:
    """Element of ``k[x, 1/x]`` stored as ``x**shift * body`` with ``body(0) != 0``."""

    __slots__ = ("shift", "body")

    def __init__(self, shift: int, body: UniPoly):
        v = body.valuation()
        if v < 0:
            shift = 0
        elif v > 0:
            body = body.shift(-v)
            shift += v
        self.shift = shift
        self.body = body

    @classmethod
    def from_poly(cls, p: UniPoly, shift: int = 0):
        return cls(shift, p)

    @property
    def field(self):
        return self.body.field

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def lowest_exponent(self):
        return None if self.is_zero() else self.shift

    def is_regular(self) -> bool:
        """True when the element extends to a polynomial in ``x``."""
        return self.is_zero() or self.shift >= 0

    def _aligned(self, other):
        lo = min(self.shift, other.shift)
        return lo, self.body.shift(self.shift - lo), other.body.shift(other.shift - lo)

    def __add__(self, other):
        lo, a, b = self._aligned(other)
        return LaurentPoly(lo, a + b)

    def __neg__(self):
        return LaurentPoly(self.shift, -self.body)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return LaurentPoly(self.shift + other.shift, self.body * other.body)
        return LaurentPoly(self.shift, self.body * other)

    __rmul__ = __mul__

    def times_x_power(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.shift + k, self.body)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.shift == other.shift and self.body == other.body

    def __hash__(self):
        return hash((self.shift, self.body))

    def terms(self) -> dict:
        """Mapping exponent -> nonzero coefficient."""
        return {k + self.shift: c for k, c in enumerate(self.body.coeffs) if c}

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in sorted(self.terms().items(), reverse=True):
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(_term_str(c, mono))
        return _join_terms(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


# -- roots --------------------------------------------------------------------

class RootReport(NamedTuple):
    roots: list
    splits_simply: bool


def roots_in_field(p: UniPoly, seed: int = 0) -> RootReport:
    """Distinct roots of ``p`` lying in its base field, sorted in field order.

    ``splits_simply`` holds iff ``p = lc * prod(t - root)`` with ``deg p``
    distinct roots.  Over QQ this is a rational-root search; over GF(p) it is
    exhaustive evaluation for small ``p`` and Cantor-Zassenhaus splitting of
    ``gcd(p, t^p - t)`` otherwise (``seed`` drives the splitting choices; the
    result does not depend on it).
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    field = p.field
    if field.characteristic == 0:
        roots = _rational_roots(p)
    elif field.p <= _EXHAUSTIVE_LIMIT:
        roots = [c for c in field.elements() if not p(c)]
    else:
        roots = _cz_roots(p, seed)
    roots = sorted(set(roots), key=field.sort_key)
    squarefree = poly_gcd(p, p.derivative()).degree == 0
    return RootReport(roots, squarefree and len(roots) == p.degree)


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(p: UniPoly) -> list:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    roots = []
    v = next(k for k, c in enumerate(ints) if c)
    if v > 0:
        roots.append(Fraction(0))
        ints = ints[v:]
    if len(ints) == 1:
        return roots
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    q = UniPoly(ints, QQ)
    for num in _divisors(ints[0]):
        for den_ in _divisors(ints[-1]):
            for cand in (Fraction(num, den_), Fraction(-num, den_)):
                if not q(cand):
                    roots.append(cand)
    return roots


def _cz_roots(p: UniPoly, seed: int) -> list:
    field = p.field
    prime = field.p
    f = p.monic()
    t = UniPoly.x(field)
    g = poly_gcd(f, powmod(t, prime, f) - t)
    rng = random.Random(seed)
    roots = []

    def split(h: UniPoly):
        if h.degree <= 0:
            return
        if h.degree == 1:
            roots.append(-h[0] / h[1])
            return
        while True:
            delta = field(rng.randrange(prime))
            w = powmod(t + delta, (prime - 1) // 2, h) - 1
            d = poly_gcd(h, w)
            if 0 < d.degree < h.degree:
                split(d)
                split(h // d)
                return

    split(g)
    return roots


def integer_nth_root(n: int, k: int):
    """Exact ``k``-th root of a nonnegative integer, or ``None``."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**k == n else None


def nth_roots(v, k: int, field, seed: int = 0) -> list:
    """All ``a`` in ``field`` with ``a**k == v``, sorted in field order."""
    v = field(v)
    if k == 1:
        return [v]
    if not v:
        return [field.zero]
    if field.characteristic == 0:
        sign = -1 if v < 0 else 1
        if sign < 0 and k % 2 == 0:
            return []
        num = integer_nth_root(abs(v.numerator), k)
        den = integer_nth_root(v.denominator, k)
        if num is None or den is None:
            return []
        r = Fraction(sign * num, den)
        return sorted({r, -r}) if k % 2 == 0 else [r]
    poly = UniPoly.monomial(1, k, field) - v
    return roots_in_field(poly, seed).roots


def roots_of_unity(field, max_order: int, seed: int = 0) -> list:
    """Roots of unity other than 1 in ``field`` with order at most ``max_order``."""
    found = set()
    for s in range(2, max_order + 1):
        for mu in nth_roots(1, s, field, seed):
            if mu != 1:
                found.add(mu)
    return sorted(found, key=field.sort_key)


def order_of(mu, bound: int):
    return multiplicative_order(mu, bound)
