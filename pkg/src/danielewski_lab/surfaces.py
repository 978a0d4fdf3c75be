"""Surface presentations ``x^h z - Q(x, y) = 0`` and the tree dictionary.

Two presentations are used throughout: a :class:`SurfaceEquation` ``(h, Q)``
and a :class:`StandardForm` ``(h, sigma)`` standing for
``x^h z - prod_i (y - sigma_i(x)) = 0`` with ``deg sigma_i < h`` and distinct
constant terms.  Standard forms correspond to rakes whose branches split at
the root.  Comb-shaped trees instead embed into higher-dimensional affine
space through the equation system built by :func:`comb_equations`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .algebra.fields import QQ
from .algebra.mpoly import XY, XYZ, Poly
from .algebra.upoly import UniPoly, poly_gcd, roots_in_field
from .errors import (
    ConstantTermCollision,
    EmptyFiber,
    EmptyLevel,
    IdentityFailure,
    InvalidStandardForm,
    LeavesAtMixedLevels,
    MultipleRoot,
    NonMonic,
    NotARake,
    NotSplit,
    RootAtZero,
    ZeroFiberPolynomial,
)
from .trees import FineWeightedTree, sigma_from_tree, validate_tree


def fiber_polynomial(Q: Poly) -> UniPoly:
    """``Q(0, y)`` as a univariate polynomial in ``y``."""
    return Q.embed(XY).eval_var("x", 0).to_uni("y")


def defining_polynomial(h: int, Q: Poly) -> Poly:
    """``x^h z - Q`` in ``k[x, y, z]``."""
    return Poly.var("x", XYZ, Q.field, power=h) * Poly.var("z", XYZ, Q.field) - Q.embed(XYZ)


@dataclass(frozen=True)
class SurfaceEquation:
    h: int
    Q: Poly

    def __post_init__(self):
        if self.h < 1:
            raise ValueError("h must be at least 1")
        object.__setattr__(self, "Q", self.Q.embed(XY))

    @property
    def field(self):
        return self.Q.field

    @property
    def F(self) -> Poly:
        return defining_polynomial(self.h, self.Q)


@dataclass(frozen=True)
class StandardForm:
    """``x^h z - prod (y - sigma_i(x)) = 0`` with validated ``sigma``."""

    h: int
    sigma: tuple
    field: object = QQ

    def __post_init__(self):
        sig = tuple(s if isinstance(s, UniPoly) else UniPoly(s, self.field) for s in self.sigma)
        object.__setattr__(self, "sigma", sig)
        if self.h < 1:
            raise InvalidStandardForm("h must be at least 1", h=self.h)
        if not sig:
            raise InvalidStandardForm("at least one sigma is required")
        for i, s in enumerate(sig):
            if s.field != self.field:
                raise InvalidStandardForm(f"sigma_{i + 1} lives over {s.field}", index=i + 1)
            if s.degree >= self.h:
                raise InvalidStandardForm(f"deg sigma_{i + 1} = {s.degree} >= h = {self.h}",
                                          index=i + 1)
        seen = {}
        for i, s in enumerate(sig):
            c = s[0]
            if c in seen:
                raise ConstantTermCollision(
                    f"sigma_{seen[c] + 1}(0) = sigma_{i + 1}(0) = {c}",
                    i=seen[c] + 1, j=i + 1, value=self.field.encode(c))
            seen[c] = i

    @property
    def r(self) -> int:
        return len(self.sigma)

    @property
    def P(self) -> Poly:
        """``prod (y - sigma_i(x))`` in ``k[x, y]``."""
        y = Poly.var("y", XY, self.field)
        out = Poly.one(XY, self.field)
        for s in self.sigma:
            out = out * (y - Poly.from_uni(s, "x", XY))
        return out

    @property
    def F(self) -> Poly:
        return defining_polynomial(self.h, self.P)

    def sigma_polys(self) -> list:
        return [Poly.from_uni(s, "x", XY) for s in self.sigma]


class DanielewskiReport(NamedTuple):
    r: int
    roots: list
    class_group_rank: int


def is_danielewski(h: int, Q: Poly) -> DanielewskiReport:
    """Accept ``x^h z - Q`` iff ``Q(0, y)`` splits with simple roots in the field.

    The divisor class group of such a surface is free of rank ``r - 1``.
    """
    if h < 1:
        raise ValueError("h must be at least 1")
    if Q.is_zero():
        raise ZeroFiberPolynomial("Q is zero")
    p = fiber_polynomial(Q)
    if p.is_zero():
        raise ZeroFiberPolynomial("Q(0, y) is identically zero")
    if p.degree == 0:
        raise EmptyFiber("Q(0, y) is a nonzero constant")
    rep = roots_in_field(p)
    if not rep.splits_simply:
        g = poly_gcd(p, p.derivative())
        if g.degree > 0:
            multiple = roots_in_field(g).roots
            y0 = Q.field.encode(multiple[0]) if multiple else None
            raise MultipleRoot("Q(0, y) has a repeated root", y0=y0)
        raise NotSplit("Q(0, y) does not split over the base field",
                       roots_found=len(rep.roots), degree=p.degree)
    return DanielewskiReport(len(rep.roots), rep.roots, len(rep.roots) - 1)


# -- standard forms and rakes ----------------------------------------------

def standard_to_tree(s: StandardForm) -> FineWeightedTree:
    """Rake with one chain per ``sigma_i`` carrying its coefficients as weights."""
    nodes = [(0, None, None)]
    nid = 1
    for sig in s.sigma:
        parent = 0
        for j in range(s.h):
            nodes.append((nid, parent, sig[j]))
            parent = nid
            nid += 1
    return FineWeightedTree.from_nodes(nodes, s.field)


def tree_to_standard(t: FineWeightedTree) -> StandardForm:
    """Inverse of :func:`standard_to_tree` on rakes branching at the root."""
    shape = validate_tree(t)
    if not shape.is_special:
        raise LeavesAtMixedLevels(f"leaf levels {sorted(set(shape.leaf_levels))}",
                                  levels=sorted(set(shape.leaf_levels)))
    if not shape.is_rake:
        raise NotARake("tree is not a rake")
    leaves = sigma_from_tree(t)
    seen = {}
    for i, lp in enumerate(leaves):
        c = lp.sigma[0]
        if c in seen:
            raise ConstantTermCollision(
                f"leaves {seen[c] + 1} and {i + 1} share the level-1 weight {c}",
                i=seen[c] + 1, j=i + 1, value=t.field.encode(c))
        seen[c] = i
    return StandardForm(shape.height, tuple(lp.sigma for lp in leaves), t.field)


# -- comb embeddings --------------------------------------------------------

def comb_variables(h: int) -> tuple:
    """Generator names ``x, y-1, y0, ..., y{h-2}, z``."""
    return ("x",) + tuple(f"y{i}" for i in range(-1, h - 1)) + ("z",)


@dataclass(frozen=True)
class CombSystem:
    h: int
    P_list: tuple
    equations: tuple
    field: object = QQ
    warnings: tuple = ()

    @property
    def gens(self) -> tuple:
        return comb_variables(self.h)


def _check_comb_polys(h: int, P_list, permissive: bool) -> list:
    if h < 1:
        raise ValueError("h must be at least 1")
    if len(P_list) != h:
        raise ValueError(f"expected {h} polynomials P_0..P_{h - 1}, got {len(P_list)}")
    warnings = []
    for l, P in enumerate(P_list):
        if P.is_zero() or P.lc != 1:
            raise NonMonic(f"P_{l} is not monic", l=l)
        if P.degree == 0:
            if not permissive:
                raise EmptyLevel(f"P_{l} = 1 has no roots", l=l)
            warnings.append(f"EmptyLevel: P_{l} = 1")
            continue
        if not P[0]:
            raise RootAtZero(f"P_{l} vanishes at 0", l=l)
        rep = roots_in_field(P)
        if not rep.splits_simply:
            if poly_gcd(P, P.derivative()).degree > 0:
                raise MultipleRoot(f"P_{l} has a repeated root", l=l)
            raise NotSplit(f"P_{l} does not split over the base field", l=l)
    return warnings


def comb_equations(h: int, P_list, permissive: bool = False) -> CombSystem:
    """Equations of the comb surface in ``A^(h+2)`` with coordinates ``x, y_-1..y_{h-2}, z``.

    The families are, for ``0 <= i < j <= h-2``::

        x z       - y_{h-2} prod_{l=0}^{h-1} P_l(y_{l-1})
        z y_{i-1} - y_i y_{h-2} prod_{l=i+1}^{h-1} P_l(y_{l-1})
        x y_i     - y_{i-1} prod_{l=0}^{i} P_l(y_{l-1})
        y_{i-1} y_j - y_i y_{j-1} prod_{l=i+1}^{j} P_l(y_{l-1})

    For ``h = 1`` only the first equation remains, with ``y_{h-2} = y_{-1}``.
    """
    P_list = tuple(P_list)
    field = P_list[0].field if P_list else QQ
    warnings = _check_comb_polys(h, P_list, permissive)
    gens = comb_variables(h)
    x = Poly.var("x", gens, field)
    z = Poly.var("z", gens, field)

    def Y(i):
        return Poly.var(f"y{i}", gens, field)

    factors = [Poly.from_uni(P, "t", ("t",)).compose([Y(l - 1)], gens) for l, P in enumerate(P_list)]

    def prod(lo, hi):
        out = Poly.one(gens, field)
        for l in range(lo, hi + 1):
            out = out * factors[l]
        return out

    eqs = [x * z - Y(h - 2) * prod(0, h - 1)]
    for i in range(h - 1):
        eqs.append(z * Y(i - 1) - Y(i) * Y(h - 2) * prod(i + 1, h - 1))
        eqs.append(x * Y(i) - Y(i - 1) * prod(0, i))
    for i, j in combinations(range(h - 1), 2):
        eqs.append(Y(i - 1) * Y(j) - Y(i) * Y(j - 1) * prod(i + 1, j))
    return CombSystem(h, P_list, tuple(eqs), field, tuple(warnings))


def comb_equation_count(h: int) -> int:
    return 1 + 2 * (h - 1) + (h - 1) * (h - 2) // 2


class CombVerification(NamedTuple):
    solution: dict
    residuals: list


def verify_comb_system(c: CombSystem) -> CombVerification:
    """Check that the system is the graph of a map over ``x != 0``.

    Solves ``x y_i = y_{i-1} prod_{l<=i} P_l(y_{l-1})`` and
    ``x z = y_{h-2} prod_l P_l(y_{l-1})`` in ``k[x, 1/x][y_-1]`` and substitutes
    the solution into every equation of ``c``; each must reduce to zero.
    """
    field = c.field
    base = ("x", "y-1")
    x_inv = Poly({(-1, 0): 1}, base, field)
    sol = {"x": Poly.var("x", base, field), "y-1": Poly.var("y-1", base, field)}
    running = Poly.one(base, field)
    prev = sol["y-1"]
    for i in range(c.h - 1):
        running = running * Poly.from_uni(c.P_list[i], "t", ("t",)).compose([prev], base)
        prev = x_inv * prev * running
        sol[f"y{i}"] = prev
    running = running * Poly.from_uni(c.P_list[c.h - 1], "t", ("t",)).compose([prev], base)
    sol["z"] = x_inv * prev * running
    images = [sol[g] for g in c.gens]
    residuals = []
    for idx, eq in enumerate(c.equations):
        res = eq.compose(images, base)
        residuals.append(res)
        if not res.is_zero():
            raise IdentityFailure(f"equation {idx} does not vanish on the solved chart",
                                  equation=idx, residual=str(res))
    return CombVerification(sol, residuals)
