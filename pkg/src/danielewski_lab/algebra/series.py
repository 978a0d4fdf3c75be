"""Formal power series in ``x`` with polynomial coefficients, truncated at ``x**N``."""

from __future__ import annotations

from ..errors import PositiveCharacteristic, WrongConstantTerm
from .mpoly import Poly


class TruncatedSeries:
    """A polynomial reduced modulo ``x**order``; arithmetic stays reduced."""

    __slots__ = ("poly", "order")

    def __init__(self, poly: Poly, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        self.poly = poly.truncate("x", order)

    @property
    def field(self):
        return self.poly.field

    def _wrap(self, other):
        if isinstance(other, TruncatedSeries):
            return other.poly, min(self.order, other.order)
        return other, self.order

    def __add__(self, other):
        p, n = self._wrap(other)
        return TruncatedSeries(self.poly + p, n)

    __radd__ = __add__

    def __sub__(self, other):
        p, n = self._wrap(other)
        return TruncatedSeries(self.poly - p, n)

    def __rsub__(self, other):
        p, n = self._wrap(other)
        return TruncatedSeries(p - self.poly, n)

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.order)

    def __mul__(self, other):
        p, n = self._wrap(other)
        a = self.poly.truncate("x", n)
        b = p.truncate("x", n) if isinstance(p, Poly) else p
        return TruncatedSeries(a * b, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = TruncatedSeries(Poly.one(self.poly.gens, self.field), self.order)
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return self.poly.truncate("x", n) == other.poly.truncate("x", n)
        return NotImplemented

    def __hash__(self):
        return hash((self.poly, self.order))

    def x_constant_term(self) -> Poly:
        """Coefficient of ``x**0`` (a polynomial in the remaining variables)."""
        return self.poly.coeff("x", 0)

    def exp(self) -> "TruncatedSeries":
        """``sum u**k / k!``; requires characteristic 0 and ``u`` divisible by ``x``."""
        _require_char0(self.field)
        if not self.x_constant_term().is_zero():
            raise WrongConstantTerm("exp needs zero constant term in x")
        one = Poly.one(self.poly.gens, self.field)
        total = TruncatedSeries(one, self.order)
        term = total
        for k in range(1, self.order):
            term = _scaled(term * self, k)
            if term.is_zero():
                break
            total = total + term
        return total

    def log(self) -> "TruncatedSeries":
        """``sum (-1)**(k+1) (u-1)**k / k``; requires constant term 1 in ``x``."""
        _require_char0(self.field)
        if self.x_constant_term() != 1:
            raise WrongConstantTerm("log needs constant term 1 in x")
        v = self - 1
        total = TruncatedSeries(Poly.zero(self.poly.gens, self.field), self.order)
        power = v
        for k in range(1, self.order):
            if power.is_zero():
                break
            coeff = self.field(1) / k if k % 2 else -self.field(1) / k
            total = total + power * coeff
            power = power * v
        return total

    def __repr__(self):
        return f"TruncatedSeries({self.poly} + O(x^{self.order}))"


def _scaled(s: TruncatedSeries, k: int) -> TruncatedSeries:
    return TruncatedSeries(s.poly / k, s.order)


def _require_char0(field):
    if field.characteristic:
        raise PositiveCharacteristic(
            f"exp/log series need characteristic 0, got {field.characteristic}",
            characteristic=field.characteristic)


def series_exp_log(u: TruncatedSeries, direction: str) -> TruncatedSeries:
    """Apply ``exp`` or ``log`` to a truncated series."""
    if direction == "exp":
        return u.exp()
    if direction == "log":
        return u.log()
    raise ValueError(f"direction must be 'exp' or 'log', not {direction!r}")
