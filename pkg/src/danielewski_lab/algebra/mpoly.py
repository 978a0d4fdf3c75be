"""Sparse multivariate polynomials with named generators.

One class covers the bivariate ring ``k[x, y]``, affine 3-space ``k[x, y, z]``
and the comb-system rings.  Exponents may be negative, which is how Laurent
polynomials in ``x`` (for instance the output of reducing modulo a surface
equation) are represented; :meth:`Poly.is_polynomial` tells the two apart.

    >>> x, y = Poly.gens_of(("x", "y"))
    >>> ((x + y) ** 2).degree("y")
    2
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from ..errors import FieldMismatch, InexactDivision
from .fields import QQ, ModP
from .upoly import UniPoly

XY = ("x", "y")
XYZ = ("x", "y", "z")

_SCALARS = (int, Fraction, ModP)


class Poly:
    """Element of ``k[gens]`` (or its localization at the generators)."""

    __slots__ = ("terms", "gens", "field", "_hash")

    def __init__(self, terms=None, gens=XY, field=QQ):
        gens = tuple(gens)
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = field(c)
                if c:
                    if len(exps) != len(gens):
                        raise ValueError(f"exponent {exps} does not match {gens}")
                    clean[tuple(exps)] = c
        self.terms = clean
        self.gens = gens
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, terms, gens, field):
        p = object.__new__(cls)
        p.terms = terms
        p.gens = gens
        p.field = field
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, gens=XY, field=QQ):
        return cls._raw({}, tuple(gens), field)

    @classmethod
    def constant(cls, c, gens=XY, field=QQ):
        gens = tuple(gens)
        c = field(c)
        return cls._raw({(0,) * len(gens): c} if c else {}, gens, field)

    @classmethod
    def one(cls, gens=XY, field=QQ):
        return cls.constant(1, gens, field)

    @classmethod
    def var(cls, name: str, gens=XY, field=QQ, power: int = 1):
        gens = tuple(gens)
        exps = tuple(power if g == name else 0 for g in gens)
        if name not in gens:
            raise ValueError(f"{name!r} is not one of {gens}")
        return cls._raw({exps: field.one}, gens, field)

    @classmethod
    def gens_of(cls, gens=XY, field=QQ):
        """Tuple of the generator polynomials."""
        return tuple(cls.var(g, gens, field) for g in gens)

    @classmethod
    def from_uni(cls, p: UniPoly, var: str = "x", gens=XY):
        gens = tuple(gens)
        i = gens.index(var)
        terms = {}
        for k, c in enumerate(p.coeffs):
            if c:
                e = [0] * len(gens)
                e[i] = k
                terms[tuple(e)] = c
        return cls._raw(terms, gens, p.field)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _idx(self, var: str) -> int:
        try:
            return self.gens.index(var)
        except ValueError:
            raise ValueError(f"{var!r} is not one of {self.gens}") from None

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if omitted); ``-1`` for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._idx(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str):
        """Lowest exponent of ``var`` among the terms, ``None`` for zero."""
        if not self.terms:
            return None
        i = self._idx(var)
        return min(e[i] for e in self.terms)

    def is_polynomial(self) -> bool:
        return all(min(e) >= 0 for e in self.terms) if self.terms else True

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.gens), self.field.zero)

    def variables(self) -> set:
        used = set()
        for e in self.terms:
            for g, k in zip(self.gens, e):
                if k:
                    used.add(g)
        return used

    def __eq__(self, other):
        if isinstance(other, Poly):
            if self.field != other.field:
                return False
            if self.gens != other.gens:
                union = self.gens + tuple(g for g in other.gens if g not in self.gens)
                return self.embed(union).terms == other.embed(union).terms
            return self.terms == other.terms
        if isinstance(other, _SCALARS):
            return self == Poly.constant(other, self.gens, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            if other.gens != self.gens:
                return other.embed(self.gens)
            return other
        if isinstance(other, _SCALARS):
            return Poly.constant(other, self.gens, self.field)
        if isinstance(other, UniPoly):
            raise TypeError("convert UniPoly with Poly.from_uni first")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(out, self.gens, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.gens, self.field)

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
        if isinstance(other, _SCALARS):
            c = self.field(other)
            if not c:
                return Poly.zero(self.gens, self.field)
            return Poly._raw({e: v * c for e, v in self.terms.items()}, self.gens, self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c}, self.gens, self.field)

    __rmul__ = __mul__

    def __truediv__(self, c):
        """Division by a nonzero scalar."""
        if isinstance(c, Poly):
            if not c.is_constant() or c.is_zero():
                raise TypeError("Poly / Poly is only defined for nonzero constants")
            c = c.constant_term()
        inv = self.field.one / self.field(c)
        return self * inv

    def __pow__(self, e: int):
        if e < 0:
            if len(self.terms) == 1:
                (exps, c), = self.terms.items()
                return Poly._raw({tuple(k * e for k in exps): (self.field.one / c) ** -e},
                                 self.gens, self.field)
            raise ValueError("negative power of a non-monomial")
        result = Poly.one(self.gens, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- structural operations ---------------------------------------------

    def embed(self, gens) -> "Poly":
        """Re-express in another generator tuple containing all used variables."""
        gens = tuple(gens)
        if gens == self.gens:
            return self
        pos = []
        for g in self.gens:
            pos.append(gens.index(g) if g in gens else None)
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(gens)
            for k, j in zip(e, pos):
                if k:
                    if j is None:
                        raise ValueError(f"cannot drop a used variable when embedding into {gens}")
                    new[j] = k
            out[tuple(new)] = c
        return Poly._raw(out, gens, self.field)

    def coeffs_in(self, var: str) -> dict:
        """Mapping ``k -> coefficient of var**k`` (coefficients free of ``var``)."""
        i = self._idx(var)
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: Poly._raw(t, self.gens, self.field) for k, t in out.items()}

    def coeff(self, var: str, k: int) -> "Poly":
        return self.coeffs_in(var).get(k, Poly.zero(self.gens, self.field))

    def shift(self, var: str, k: int) -> "Poly":
        """Multiply by ``var**k`` (``k`` may be negative)."""
        i = self._idx(var)
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] += k
            out[tuple(e2)] = c
        return Poly._raw(out, self.gens, self.field)

    def exact_shift_down(self, var: str, k: int) -> "Poly":
        """Exact division by ``var**k``; raises :class:`InexactDivision` otherwise."""
        m = self.min_degree(var)
        if m is not None and m < k:
            raise InexactDivision(f"not divisible by {var}^{k}", residual=str(self))
        return self.shift(var, -k)

    def truncate(self, var: str, n: int) -> "Poly":
        """Drop every term whose ``var`` exponent is at least ``n``."""
        i = self._idx(var)
        return Poly._raw({e: c for e, c in self.terms.items() if e[i] < n}, self.gens, self.field)

    def scale_var(self, var: str, a) -> "Poly":
        """The polynomial obtained by replacing ``var`` with ``a * var``."""
        i = self._idx(var)
        a = self.field(a)
        out = {}
        for e, c in self.terms.items():
            v = c * a ** e[i]
            if v:
                out[e] = v
        return Poly._raw(out, self.gens, self.field)

    def diff(self, var: str) -> "Poly":
        i = self._idx(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                v = c * e[i]
                if v:
                    e2 = list(e)
                    e2[i] -= 1
                    out[tuple(e2)] = v
        return Poly._raw(out, self.gens, self.field)

    def eval_var(self, var: str, value) -> "Poly":
        """Substitute a scalar for ``var`` (the generator tuple is kept)."""
        i = self._idx(var)
        value = self.field(value)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < 0 and not value:
                raise ZeroDivisionError(f"{var}=0 in a Laurent term")
            e2 = e[:i] + (0,) + e[i + 1:]
            v = c * value ** k
            out[e2] = out.get(e2, self.field.zero) + v
        return Poly._raw({e: c for e, c in out.items() if c}, self.gens, self.field)

    def compose(self, images, gens=None) -> "Poly":
        """Substitute ``images[i]`` for generator ``i``.

        ``images`` is a sequence aligned with :attr:`gens` or a dict keyed by
        generator name (missing names map to themselves).  Negative exponents
        are allowed only where the image is a monomial.
        """
        if isinstance(images, dict):
            gens = tuple(gens) if gens is not None else self.gens
            imgs = []
            for g in self.gens:
                if g in images:
                    imgs.append(images[g])
                else:
                    imgs.append(Poly.var(g, gens, self.field))
        else:
            imgs = list(images)
        if gens is None:
            gens = next((im.gens for im in imgs if isinstance(im, Poly)), self.gens)
        gens = tuple(gens)
        imgs = [im.embed(gens) if isinstance(im, Poly) else Poly.constant(im, gens, self.field)
                for im in imgs]
        caches = [{1: im} for im in imgs]

        def power(i, k):
            if k == 0:
                return None
            cache = caches[i]
            if k in cache:
                return cache[k]
            if k < 0:
                val = imgs[i] ** k
            else:
                half = power(i, k // 2)
                val = half * half
                if k % 2:
                    val = val * imgs[i]
            cache[k] = val
            return val

        # Horner-like grouping by the first generator keeps products small.
        out = Poly.zero(gens, self.field)
        for e, c in self.terms.items():
            term = Poly.constant(c, gens, self.field)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def __call__(self, *images):
        return self.compose(images)

    def to_uni(self, var: str) -> UniPoly:
        """Convert to a :class:`UniPoly` when only ``var`` occurs (nonnegatively)."""
        i = self._idx(var)
        coeffs: dict = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i) or e[i] < 0:
                raise ValueError(f"{self} is not a polynomial in {var} alone")
            coeffs[e[i]] = c
        n = max(coeffs) + 1 if coeffs else 0
        return UniPoly([coeffs.get(k, self.field.zero) for k in range(n)], self.field)

    # -- printing -----------------------------------------------------------

    def monomial_key(self, exps) -> str:
        parts = []
        for g, k in zip(self.gens, exps):
            if k == 1:
                parts.append(g)
            elif k:
                parts.append(f"{g}^{k}")
        return "*".join(parts) if parts else "1"

    def sorted_terms(self):
        """Terms in a deterministic order (descending total degree, then lexicographic)."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = self.monomial_key(e)
            s = str(c)
            if mono == "1":
                pieces.append(s)
            elif s == "1":
                pieces.append(mono)
            elif s == "-1":
                pieces.append("-" + mono)
            elif "/" in s:
                pieces.append(f"({s})*{mono}")
            else:
                pieces.append(f"{s}*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Poly({self}; {','.join(self.gens)}; {self.field})"


# -- parsing ----------------------------------------------------------------

_MONO_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_\-]*?)\s*(?:\^\s*(-?\d+))?\s*$")


def parse_monomial(key: str, gens) -> tuple:
    """Exponent tuple of a monomial key such as ``"x^2*y"`` or ``"1"``."""
    gens = tuple(gens)
    exps = [0] * len(gens)
    key = key.strip()
    if key in ("1", ""):
        return tuple(exps)
    for factor in key.split("*"):
        m = _MONO_RE.match(factor)
        if not m or m.group(1) not in gens:
            raise ValueError(f"bad monomial {key!r} for generators {gens}")
        exps[gens.index(m.group(1))] += int(m.group(2)) if m.group(2) else 1
    return tuple(exps)


def poly_from_map(data: dict, gens, field) -> Poly:
    terms: dict = {}
    for key, c in data.items():
        e = parse_monomial(key, gens)
        terms[e] = terms.get(e, field.zero) + field(c)
    return Poly(terms, gens, field)


def parse_poly(text: str, gens=XY, field=QQ) -> Poly:
    """Parse an arithmetic expression such as ``"(1-x)*(y^2-1)"``.

    Operands are integer literals or generator names combined with
    ``+ - * / ^ **`` and parentheses.  Division is allowed only by constants.
    """
    gens = tuple(gens)
    safe = {g: f"__g{i}" for i, g in enumerate(gens)}
    src = text.replace("^", "**")
    for g in sorted(gens, key=len, reverse=True):
        src = re.sub(rf"(?<![A-Za-z0-9_]){re.escape(g)}(?![A-Za-z0-9_])", safe[g], src)
    tree = ast.parse(src, mode="eval")
    names = {safe[g]: Poly.var(g, gens, field) for g in gens}

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Poly.constant(node.value, gens, field)
        if isinstance(node, ast.Name) and node.id in names:
            return names[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left = ev(node.left)
            if isinstance(node.op, ast.Pow):
                return left ** _int_literal(node.right, text)
            right = ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
        raise ValueError(f"unsupported expression: {text!r}")

    return ev(tree)


def _int_literal(node, text):
    sign = 1
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        sign, node = -1, node.operand
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return sign * node.value
    raise ValueError(f"exponent must be an integer literal in {text!r}")
