"""Exact base fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values (always in lowest
terms with a positive denominator).  Elements of GF(p) are :class:`ModP`
residues in ``[0, p)``.  A field object coerces Python ints, strings and
fractions into its own elements::

    >>> QQ("3/6")
    Fraction(1, 2)
    >>> GF(5)(7)
    ModP(2, 5)
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import FieldMismatch

MAX_PRIME = 2**31


class ModP:
    """A residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            if self.v == 0:
                raise ZeroDivisionError("0 has no inverse")
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Rationals:
    """The field of rational numbers."""

    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, ModP):
            raise FieldMismatch("cannot coerce a GF(p) element into Q")
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def contains(self, c) -> bool:
        return isinstance(c, Fraction)

    def sort_key(self, c):
        return c

    def encode(self, c) -> str:
        return str(c)

    def descriptor(self) -> dict:
        return {"field": "Q"}

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p)."""

    p: int

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> ModP:
        if isinstance(value, ModP):
            if value.p != self.p:
                raise FieldMismatch(f"GF({value.p}) element in GF({self.p})")
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            return ModP(value.numerator * pow(value.denominator, -1, self.p), self.p)
        return ModP(int(value), self.p)

    @property
    def zero(self) -> ModP:
        return ModP(0, self.p)

    @property
    def one(self) -> ModP:
        return ModP(1, self.p)

    def contains(self, c) -> bool:
        return isinstance(c, ModP) and c.p == self.p

    def elements(self):
        return (ModP(i, self.p) for i in range(self.p))

    def sort_key(self, c):
        return c.v

    def encode(self, c) -> int:
        return c.v

    def descriptor(self) -> dict:
        return {"field": "Fp", "p": self.p}

    def __str__(self):
        return f"GF({self.p})"


QQ = Rationals()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Return the prime field with ``p`` elements (``p`` prime, ``p < 2**31``)."""
    if not isinstance(p, int) or not _is_prime(p) or p >= MAX_PRIME:
        raise ValueError(f"{p!r} is not a prime below 2**31")
    return PrimeField(p)


Field = Rationals | PrimeField


def parse_field(desc) -> Field:
    """Parse ``"Q"``, ``"Fp:5"``, or a JSON descriptor ``{"field": "Fp", "p": 5}``."""
    if isinstance(desc, (Rationals, PrimeField)):
        return desc
    if isinstance(desc, dict):
        name = desc.get("field", "Q")
        if name == "Q":
            return QQ
        if name == "Fp":
            return GF(int(desc["p"]))
        raise ValueError(f"unknown field {name!r}")
    text = str(desc).strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        return GF(int(text[3:]))
    raise ValueError(f"unknown field {desc!r}")


def multiplicative_order(c, bound: int):
    """Smallest ``s`` in ``1..bound`` with ``c**s == 1``, or ``None``."""
    acc = c
    for s in range(1, bound + 1):
        if acc == 1:
            return s
        acc = acc * c
    return None
