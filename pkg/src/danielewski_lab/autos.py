"""Automorphisms of Danielewski surfaces in standard form.

An automorphism of ``x^h z = prod (y - sigma_i(x))`` (``h >= 2``) is encoded
by a datum ``(alpha, mu, a, b)``, where ``alpha`` permutes the branches and
``b(x)`` is a polynomial next to the nonzero scalars ``mu`` and ``a``.  The
datum is valid when

    c(x) = sigma_{alpha(i)}(a x) - mu sigma_i(x) + (a x)^h b(x)

does not depend on ``i``; the map is then ``(a x, mu y + c(x), ...)``.  With
the ``(a x)^h`` normalization the composition rule

    (alpha2 alpha1, mu2 mu1, a2 a1, a2^-h mu2 b1(x) + b2(a1 x))

is exactly the composition of the associated maps of affine 3-space.

Permutations are tuples of 0-based indices; the JSON layer converts to 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import NamedTuple

from .algebra.fields import multiplicative_order
from .algebra.mpoly import XY, XYZ, Poly
from .algebra.reduction import reduce_mod_surface, series_surface_residual
from .algebra.series import TruncatedSeries, _require_char0
from .algebra.upoly import UniPoly, nth_roots, poly_gcd, roots_in_field, roots_of_unity
from .errors import (
    DatumInconsistent,
    DivisibilityFailure,
    HTooSmall,
    InfiniteSingularLocus,
    InvalidDatum,
    LemmaViolation,
    PrecisionTooLow,
)
from .maps import AffineEndo3
from .standardize import conjugation_pair, exp_witness, hensel_standardize
from .surfaces import StandardForm, defining_polynomial, fiber_polynomial, is_danielewski


def _xpoly(u: UniPoly, gens=XY) -> Poly:
    return Poly.from_uni(u, "x", gens)


# -- data ------------------------------------------------------------------

@dataclass(frozen=True)
class AutDatum:
    alpha: tuple
    mu: object
    a: object
    b: UniPoly

    @classmethod
    def identity(cls, r: int, field) -> "AutDatum":
        return cls(tuple(range(r)), field.one, field.one, UniPoly.zero(field))

    @property
    def field(self):
        return self.b.field


def _check_structure(s: StandardForm, d: AutDatum):
    if sorted(d.alpha) != list(range(s.r)):
        raise InvalidDatum(f"alpha {list(d.alpha)} is not a permutation of {s.r} branches")
    if not d.mu or not d.a:
        raise InvalidDatum("mu and a must be nonzero")
    if d.b.field != s.field:
        raise InvalidDatum("b lives over a different field")


def datum_c_values(s: StandardForm, d: AutDatum) -> list:
    """``c_i(x)`` for every branch ``i``."""
    _check_structure(s, d)
    shift = d.b.shift(s.h) * d.a ** s.h
    return [s.sigma[d.alpha[i]].scale(d.a) - s.sigma[i] * d.mu + shift for i in range(s.r)]


def _cycles(alpha) -> list:
    seen, out = set(), []
    for start in range(len(alpha)):
        if start in seen:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = alpha[i]
        out.append(cyc)
    return out


def check_lemma(s: StandardForm, d: AutDatum) -> dict:
    """Necessary conditions satisfied by every valid datum when ``r >= 2``.

    A trivial permutation forces ``mu = 1``.  A nontrivial one has at most
    one fixed point, all other cycles share one length ``s``, and ``mu`` is a
    primitive ``s``-th root of unity, except when ``mu = 1``, which requires
    the characteristic to equal ``s``.
    """
    if s.r < 2:
        return {"cycle_length": None}
    field = s.field
    cycles = _cycles(d.alpha)
    fixed = [c for c in cycles if len(c) == 1]
    moving = {len(c) for c in cycles if len(c) > 1}
    if not moving:
        if d.mu != 1:
            raise LemmaViolation("trivial permutation with mu != 1", mu=field.encode(d.mu))
        return {"cycle_length": None}
    if len(fixed) > 1:
        raise LemmaViolation("nontrivial permutation with several fixed points",
                             fixed=[c[0] + 1 for c in fixed])
    if len(moving) > 1:
        raise LemmaViolation("nontrivial cycles of different lengths", lengths=sorted(moving))
    length = moving.pop()
    if d.mu == 1:
        if field.characteristic != length:
            raise LemmaViolation("mu = 1 with a nontrivial permutation outside characteristic s",
                                 s=length)
    elif multiplicative_order(d.mu, length) != length:
        raise LemmaViolation("mu is not a primitive root of unity of the cycle length",
                             s=length, mu=field.encode(d.mu))
    return {"cycle_length": length}


def datum_validate(s: StandardForm, d: AutDatum) -> UniPoly:
    """Return the common ``c(x)`` of a valid datum (see the module docstring)."""
    cs = datum_c_values(s, d)
    for i in range(1, len(cs)):
        if cs[i] != cs[0]:
            raise DatumInconsistent(f"c_1 = {cs[0]} differs from c_{i + 1} = {cs[i]}",
                                    i=1, j=i + 1)
    check_lemma(s, d)
    return cs[0]


def datum_to_endo(s: StandardForm, d: AutDatum) -> AffineEndo3:
    """The automorphism of affine 3-space attached to a valid datum.

    ``Psi = (a x, mu y + c, a^-h mu^r z + (a x)^-h (prod(mu y + c - sigma_i(a x)) - mu^r P))``
    which satisfies ``Psi^*(x^h z - P) = mu^r (x^h z - P)``.
    """
    c = datum_validate(s, d)
    field, h, r = s.field, s.h, s.r
    x, y, z = Poly.gens_of(XYZ, field)
    new_y = y * d.mu + _xpoly(c, XYZ)
    prod_ = Poly.one(XYZ, field)
    for sig in s.sigma:
        prod_ = prod_ * (new_y - _xpoly(sig.scale(d.a), XYZ))
    mu_r = d.mu ** r
    diff = prod_ - s.P.embed(XYZ) * mu_r
    m = diff.min_degree("x")
    if m is not None and m < h:
        raise DivisibilityFailure(f"difference is not divisible by x^{h}", residual=str(diff))
    a_inv_h = (field.one / d.a) ** h
    new_z = z * (a_inv_h * mu_r) + diff.shift("x", -h) * a_inv_h
    return AffineEndo3(x * d.a, new_y, new_z)


def compose_data(s: StandardForm, d1: AutDatum, d2: AutDatum) -> AutDatum:
    """Datum of ``endo(d2) o endo(d1)``."""
    datum_validate(s, d1)
    datum_validate(s, d2)
    field, h = s.field, s.h
    alpha = tuple(d2.alpha[d1.alpha[i]] for i in range(s.r))
    b = d1.b * ((field.one / d2.a) ** h * d2.mu) + d2.b.scale(d1.a)
    out = AutDatum(alpha, d2.mu * d1.mu, d2.a * d1.a, b)
    datum_validate(s, out)
    return out


# -- generator classification ------------------------------------------------

class TypeB(NamedTuple):
    tau: UniPoly


class TypeC(NamedTuple):
    tau: UniPoly
    q0: int


class TypeD(NamedTuple):
    tau: UniPoly
    s: int
    i: int
    mu: object


class TypeE(NamedTuple):
    c: UniPoly
    s: int


@dataclass(frozen=True)
class GeneratorReport:
    always_a: bool = True
    b_witness: TypeB | None = None
    c_witness: TypeC | None = None
    d_witness: TypeD | None = None
    e_witness: TypeE | None = None
    f_flag: bool = False
    warnings: tuple = ()
    generators: dict = dc_field(default_factory=dict)


def _shift_y(P: Poly, t: UniPoly) -> Poly:
    """``P(x, y + t(x))``."""
    x, y = Poly.gens_of(XY, P.field)
    return P.compose([x, y + _xpoly(t)], XY)


def _common_translate(s: StandardForm):
    tau = s.sigma[0] - s.sigma[0][0]
    if all(sig - sig[0] == tau for sig in s.sigma):
        return tau
    return None


def _find_type_c(s: StandardForm):
    for q0 in range(2, s.h):
        coeffs = []
        ok = True
        for e in range(s.h):
            if e % q0 == 0:
                coeffs.append(s.field.zero)
                continue
            vals = {sig[e] for sig in s.sigma}
            if len(vals) != 1:
                ok = False
                break
            coeffs.append(vals.pop())
        if not ok:
            continue
        tau = UniPoly(coeffs, s.field)
        shifted = _shift_y(s.P, tau)
        if all(e[0] % q0 == 0 for e in shifted.terms):
            return TypeC(tau, q0)
    return None


def _tau_candidates(s: StandardForm, mu, warnings: list) -> list:
    field, r = s.field, s.r
    cands = []
    if field.characteristic == 0 or r % field.characteristic:
        total = UniPoly.zero(field)
        for sig in s.sigma:
            total = total + sig
        cands.append(total / r)
    elif "CharacteristicDividesR" not in warnings:
        warnings.append("CharacteristicDividesR")
    cands.extend(s.sigma)
    inv = field.one / (field.one - mu)
    for sj in s.sigma:
        cands.append((sj - s.sigma[0] * mu) * inv)
    unique = []
    for t in cands:
        if t not in unique:
            unique.append(t)
    return unique


def _find_type_d(s: StandardForm, warnings: list):
    field = s.field
    best = None
    for mu in roots_of_unity(field, s.r):
        order = multiplicative_order(mu, s.r)
        if best is not None and order <= best.s:
            continue
        for tau in _tau_candidates(s, mu, warnings):
            shifted = [sig - tau for sig in s.sigma]
            if sorted(map(_key(field), (t * mu for t in shifted))) != sorted(map(_key(field), shifted)):
                continue
            i = 1 if any(t.is_zero() for t in shifted) else 0
            Pt = _shift_y(s.P, tau)
            if all(e[1] % order == i % order for e in Pt.terms):
                best = TypeD(tau, order, i, mu)
                break
    return best


def _key(field):
    return lambda u: tuple(field.sort_key(c) for c in u.coeffs)


def _r_adic_digits_free_of_y(P: Poly, R: Poly) -> bool:
    rem = P
    s = R.degree("y")
    while not rem.is_zero():
        q = Poly.zero(XY, P.field)
        cur = rem
        y = Poly.var("y", XY, P.field)
        while cur.degree("y") >= s:
            d = cur.degree("y")
            term = cur.coeff("y", d) * y ** (d - s)
            q = q + term
            cur = cur - term * R
        if "y" in cur.variables():
            return False
        rem = q
    return True


def _find_type_e(s: StandardForm):
    field = s.field
    p = field.characteristic
    if not p:
        return None
    key = _key(field)
    base = sorted(map(key, s.sigma))
    x, y = Poly.gens_of(XY, field)
    for sj in s.sigma[1:]:
        c = sj - s.sigma[0]
        if not c[0]:
            continue
        if sorted(key(sig + c) for sig in s.sigma) != base:
            continue
        cp = _xpoly(c)
        if _shift_y(s.P, c) != s.P:
            continue
        R = y ** p - cp ** (p - 1) * y
        if _r_adic_digits_free_of_y(s.P, R):
            return TypeE(c, p)
    return None


def H_map(s: StandardForm, tau: UniPoly, a) -> AffineEndo3:
    """``(a x, y + tau(a x) - tau(x), a^-h z)``."""
    field = s.field
    x, y, z = Poly.gens_of(XYZ, field)
    return AffineEndo3(x * a, y + _xpoly(tau.scale(a) - tau, XYZ), z * (field.one / a) ** s.h)


def S_map(s: StandardForm, w: TypeD, mu=None) -> AffineEndo3:
    """``(x, mu y + (1 - mu) tau, mu^i z)``."""
    mu = w.mu if mu is None else mu
    x, y, z = Poly.gens_of(XYZ, s.field)
    return AffineEndo3(x, y * mu + _xpoly(w.tau, XYZ) * (1 - mu), z * mu ** w.i)


def T_map(s: StandardForm, c: UniPoly) -> AffineEndo3:
    x, y, z = Poly.gens_of(XYZ, s.field)
    return AffineEndo3(x, y + _xpoly(c, XYZ), z)


def delta_map(s: StandardForm, b: UniPoly) -> AffineEndo3:
    """``Delta_b = (x, y + x^h b, z + x^-h (P(x, y + x^h b) - P(x, y)))``."""
    field = s.field
    x, y, z = Poly.gens_of(XYZ, field)
    shift = _xpoly(b.shift(s.h), XYZ)
    P = s.P.embed(XYZ)
    diff = P.compose([x, y + shift, z], XYZ) - P
    return AffineEndo3(x, y + shift, z + diff.exact_shift_down("x", s.h))


def classify_generators(s: StandardForm, sample_a=None) -> GeneratorReport:
    """Which of the generator families (a)-(f) occur for ``s``, with witnesses.

    The report also carries sample generators as explicit maps of affine
    3-space: ``Delta_1``, ``H_a`` for a sample ``a``, the cyclic maps for every
    admissible root of unity, ``T_c`` and the involution for ``h = 1``.
    """
    field = s.field
    warnings: list = []
    gens: dict = {"a": delta_map(s, UniPoly.one(field))}
    tau = _common_translate(s)
    b = TypeB(tau) if tau is not None else None
    if b is not None:
        a = field(sample_a) if sample_a is not None else field(2 if field.characteristic != 2 else 1)
        if a and a != 1:
            gens["b"] = H_map(s, tau, a)
    c = _find_type_c(s)
    if c is not None:
        for k, root in enumerate(nth_roots(1, c.q0, field)):
            if root != 1:
                gens[f"c{k}"] = H_map(s, c.tau, root)
    d = _find_type_d(s, warnings)
    if d is not None:
        gens["d"] = S_map(s, d)
    e = _find_type_e(s)
    if e is not None:
        gens["e"] = T_map(s, e.c)
    f_flag = s.h == 1
    if f_flag:
        x, y, z = Poly.gens_of(XYZ, field)
        gens["f"] = AffineEndo3(z, y, x)
    return GeneratorReport(True, b, c, d, e, f_flag, tuple(warnings), gens)


# -- isomorphism decision ----------------------------------------------------

class IsoWitness(NamedTuple):
    a: object
    mu: object
    tau: UniPoly
    alpha: tuple
    residual: Poly


def iso_identity_residual(s1: StandardForm, s2: StandardForm, a, mu, tau: UniPoly) -> Poly:
    """``P2(a x, y) - mu^r P1(x, y/mu + tau(x))``."""
    field = s1.field
    x, y = Poly.gens_of(XY, field)
    left = s2.P.scale_var("x", a)
    right = s1.P.compose([x, y * (field.one / mu) + _xpoly(tau)], XY) * mu ** s1.r
    return left - right


def _sorted_order(s: StandardForm) -> list:
    return sorted(range(s.r), key=lambda i: s.field.sort_key(s.sigma[i][0]))


def _candidate_alphas(c1: list, c2: list, field):
    """Permutations matching the constant terms by an affine map ``t -> mu t + c0``.

    Yields ``(alpha, mu)`` in lexicographic order of ``alpha``.
    """
    r = len(c1)
    index2 = {v: j for j, v in enumerate(c2)}
    if r == 1:
        yield (0,), field.one
        return
    for j0 in range(r):
        for j1 in range(r):
            if j1 == j0:
                continue
            mu = (c2[j0] - c2[j1]) / (c1[0] - c1[1])
            c0 = c2[j0] - mu * c1[0]
            alpha = [j0, j1]
            for i in range(2, r):
                j = index2.get(mu * c1[i] + c0)
                if j is None or j in alpha:
                    break
                alpha.append(j)
            else:
                yield tuple(alpha), mu


def iso_decide(s1: StandardForm, s2: StandardForm):
    """A witness ``(a, mu, tau, alpha)`` of ``P2(a x, y) = mu^r P1(x, y/mu + tau)`` or ``None``.

    ``alpha`` maps branch ``i`` of ``s1`` to branch ``alpha[i]`` of ``s2`` so
    that ``sigma2_{alpha(i)}(a x) = mu (sigma1_i(x) - tau(x))``.  The search
    runs over branches sorted by constant term and returns the first witness
    in lexicographic order; the identity is re-verified before returning.
    """
    if s1.field != s2.field or s1.h != s2.h or s1.r != s2.r:
        return None
    field = s1.field
    o1, o2 = _sorted_order(s1), _sorted_order(s2)
    sig1 = [s1.sigma[i] for i in o1]
    sig2 = [s2.sigma[i] for i in o2]
    c1 = [s[0] for s in sig1]
    c2 = [s[0] for s in sig2]
    for alpha, mu in _candidate_alphas(c1, c2, field):
        for a in _a_candidates(sig1, sig2, alpha, mu, field):
            tau = (sig1[0] * mu - sig2[alpha[0]].scale(a)) / mu
            if any(sig2[alpha[i]].scale(a) != (sig1[i] - tau) * mu for i in range(s1.r)):
                continue
            res = iso_identity_residual(s1, s2, a, mu, tau)
            if not res.is_zero():
                continue
            alpha_orig = [0] * s1.r
            for i, j in enumerate(alpha):
                alpha_orig[o1[i]] = o2[j]
            return IsoWitness(a, mu, tau, tuple(alpha_orig), res)
    return None


def _a_candidates(sig1, sig2, alpha, mu, field) -> list:
    r = len(sig1)
    if r == 1:
        return [field.one]
    for i in range(1, r):
        d1 = sig1[i] - sig1[0]
        d2 = sig2[alpha[i]] - sig2[alpha[0]]
        for k in range(1, max(d1.degree, d2.degree) + 1):
            if d1[k] and d2[k]:
                return nth_roots(mu * d1[k] / d2[k], k, field)
            if d1[k] or d2[k]:
                return []
    return [field.one]


def constant_form(s: StandardForm) -> StandardForm:
    """The standard form with the same constant terms and no ``x``-dependence."""
    return StandardForm(s.h, tuple(UniPoly.constant(sig[0], s.field) for sig in s.sigma), s.field)


def gm_action_exists(s: StandardForm):
    """``tau`` with ``sigma_i = sigma_i(0) + tau`` for all ``i``, or ``None``.

    Such a ``tau`` exists exactly when the surface carries a nontrivial
    multiplicative group action; characteristic 0 only.
    """
    _require_char0(s.field)
    return _common_translate(s)


# -- group actions on x^h z = Q -------------------------------------------------

class NonextendableReport(NamedTuple):
    theta: AffineEndo3
    surface_residual: Poly
    x_component_ok: bool
    group_law_residuals: list | None
    involution_residuals: list | None
    involution_factor_residual: Poly | None
    series_residual: Poly
    phi_a: AffineEndo3
    order: int


def theta_map(h: int, P: UniPoly, a) -> AffineEndo3:
    """``Phi^s o H_a o Phi_s`` for the surface ``x^h z = (1 - x) P(y)``."""
    Q = _one_minus_x_times(P)
    dec = hensel_standardize(h, Q)
    pair = conjugation_pair(dec)
    tau = UniPoly.zero(Q.field)
    H = H_map(dec.standard_form, tau, Q.field(a))
    return pair.phi_up @ H @ pair.phi_down


def _one_minus_x_times(P: UniPoly) -> Poly:
    field = P.field
    x = Poly.var("x", XY, field)
    return (1 - x) * Poly.from_uni(P, "y", XY)


def involution_J(P: UniPoly) -> AffineEndo3:
    """``(-x, y, (1 + x)((1 + x) z + P(y)))``."""
    field = P.field
    x, y, z = Poly.gens_of(XYZ, field)
    Py = Poly.from_uni(P, "y", XYZ)
    return AffineEndo3(-x, y, (1 + x) * ((1 + x) * z + Py))


def holomorphic_phi(h: int, Q: Poly, a, order: int) -> AffineEndo3:
    """Formal conjugate ``Psi o H_a o Psi^-1`` of the scaling ``H_a``, modulo ``x**order``.

    ``Psi`` is the exponential witness of the standard form of ``Q``; the
    standard form must have constant ``sigma`` (so that ``H_a`` is
    ``(a x, y, a^-h z)``).
    """
    dec = hensel_standardize(h, Q)
    if any(sig.degree > 0 for sig in dec.sigma):
        raise ValueError("the standard form must have constant sigma")
    field = dec.field
    a = field(a)
    M = order + h
    _lam, _f, E = exp_witness(dec, M)
    E_inv = _series_reciprocal(E, M)
    Ea = TruncatedSeries(E.poly.scale_var("x", a), M)
    ratio = (Ea * E_inv).poly * (field.one / a) ** h
    P = dec.P
    R1, R2 = dec.R1, dec.R2
    tail = (E.poly - R1).exact_shift_down("x", h)
    tail_a = (Ea.poly - R1.scale_var("x", a)).exact_shift_down("x", h)
    x, y, z = Poly.gens_of(XYZ, field)
    Z = (ratio.embed(XYZ) * (z - R2.embed(XYZ))
         + (ratio * tail * P).embed(XYZ)
         - (tail_a * P.scale_var("x", a)).embed(XYZ) * (field.one / a) ** h
         + R2.scale_var("x", a).embed(XYZ))
    return AffineEndo3(x * a, y, Z.truncate("x", M))


def _series_reciprocal(E: TruncatedSeries, M: int) -> TruncatedSeries:
    lam = E.poly.coeff("x", 0)
    if not lam.is_constant():
        raise ValueError("leading coefficient must be a constant")
    c = lam.constant_term()
    u = TruncatedSeries(E.poly / c - 1, M)
    total = TruncatedSeries(Poly.one(E.poly.gens, E.field), M)
    term = total
    for _ in range(1, M):
        term = -(term * u)
        if term.is_zero():
            break
        total = total + term
    return total * (E.field.one / c)


def nonextendable_family(h: int, P: UniPoly, a, order: int = 8, a_prime=None) -> NonextendableReport:
    """Scalings of ``x^h z = (1 - x) P(y)`` that do not extend to affine 3-space.

    Builds ``theta_a`` and checks that it preserves the surface, scales ``x``
    by ``a``, composes like the group (against ``a_prime`` when given), agrees
    with the involution ``J`` when ``h = 2`` and ``a = -1``, and agrees on the
    surface with the formal conjugate ``Phi_a`` modulo ``x**order``.
    """
    field = P.field
    _require_char0(field)
    a = field(a)
    if not a:
        raise InvalidDatum("a must be nonzero")
    if h < 2:
        raise HTooSmall("the family needs h >= 2", h=h)
    if order < h:
        raise PrecisionTooLow(f"order {order} is below h = {h}", order=order, h=h)
    Q = _one_minus_x_times(P)
    rep = is_danielewski(h, Q)
    if rep.r < 2:
        raise InvalidDatum("P needs at least two simple roots", r=rep.r)
    F = defining_polynomial(h, Q)
    theta = theta_map(h, P, a)
    surf = reduce_mod_surface(theta.pullback(F), h, Q)
    x_ok = theta.X == Poly.var("x", XYZ, field) * a
    law = None
    if a_prime is not None:
        a_prime = field(a_prime)
        law = (theta @ theta_map(h, P, a_prime)).residuals_mod(theta_map(h, P, a * a_prime), h, Q)
    inv = factor = None
    if h == 2 and a == -1:
        J = involution_J(P)
        inv = theta.residuals_mod(J, h, Q)
        factor = J.pullback(F) - F * (1 + Poly.var("x", XYZ, field)) ** 2
    phi = holomorphic_phi(h, Q, a, order)
    series = Poly.zero(XY, field)
    for d in phi - theta:
        series = series + series_surface_residual(d, h, Q, order)
    return NonextendableReport(theta, surf, x_ok, law, inv, factor, series, phi, order)


def ga_action(h: int, Q: Poly, b: UniPoly, t) -> AffineEndo3:
    """``(x, y + x^h b t, z + x^-h (Q(x, y + x^h b t) - Q(x, y)))``."""
    is_danielewski(h, Q)
    field = Q.field
    x, y, z = Poly.gens_of(XYZ, field)
    shift = _xpoly(b.shift(h), XYZ) * field(t)
    Qz = Q.embed(XYZ)
    diff = Qz.compose([x, y + shift, z], XYZ) - Qz
    m = diff.min_degree("x")
    if m is not None and m < h:
        raise DivisibilityFailure("translation difference not divisible by x^h")
    return AffineEndo3(x, y + shift, z + diff.shift("x", -h))


# -- singular level values -------------------------------------------------

def singular_values(h: int, Q: Poly) -> list:
    """Values ``t`` for which ``x^h z - Q - t = 0`` is singular, sorted.

    Singular points lie on ``x = 0`` at common roots ``y*`` of ``dQ/dy(0, y)``
    and ``dQ/dx(0, y)``, with ``t = -Q(0, y*)``.
    """
    if h < 2:
        raise HTooSmall("singular values are only analyzed for h >= 2", h=h)
    field = Q.field
    Qy = fiber_polynomial(Q.diff("y"))
    Qx = fiber_polynomial(Q.diff("x"))
    g = poly_gcd(Qy, Qx)
    if g.is_zero():
        raise InfiniteSingularLocus("both partial derivatives vanish on x = 0")
    if g.degree == 0:
        return []
    q0 = fiber_polynomial(Q)
    vals = {-q0(root) for root in roots_in_field(g).roots}
    return sorted(vals, key=field.sort_key)


def _affine_match(A: list, B: list, field) -> bool:
    if len(A) != len(B):
        return False
    if len(A) <= 1:
        return True
    target = set(B)
    for b0, b1 in product(B, B):
        if b0 == b1:
            continue
        m = (b1 - b0) / (A[1] - A[0])
        c = b0 - m * A[0]
        if {m * t + c for t in A} == target:
            return True
    return False


def obstruction_compare(surf_a, surf_b, strict: bool = False) -> str:
    """``"NotAlgebraicallyEquivalent"`` when singular values rule out an ambient equivalence.

    ``surf_a`` and ``surf_b`` are ``(h, Q)`` pairs.  By default only the
    number of singular values is compared; ``strict`` also asks for an
    affine map of the line carrying one set onto the other.
    """
    va = singular_values(*surf_a)
    vb = singular_values(*surf_b)
    if len(va) != len(vb):
        return "NotAlgebraicallyEquivalent"
    if strict and not _affine_match(va, vb, surf_a[1].field):
        return "NotAlgebraicallyEquivalent"
    return "PossiblyEquivalent"
