"""Standard forms of ``x^h z - Q(x, y) = 0`` by Hensel lifting.

Every Danielewski surface ``x^h z = Q`` can be rewritten uniquely as
``Q = R1 * prod(y - sigma_i) + x^h * R2`` with ``deg sigma_i < h``,
``deg_x R1 < h`` and ``R1(0, y)`` a nonzero constant.  The maps
``(x, y, R1 z + R2)`` and ``(x, y, f z + g P - f R2)`` (with ``R1 f + x^h g = 1``)
are mutually inverse isomorphisms between the surface and its standard form.
Over a field of characteristic zero, ``R1`` can moreover be replaced by the
exponential ``lambda * exp(x f)``, giving a formal (holomorphic) equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.mpoly import XY, XYZ, Poly
from .algebra.series import TruncatedSeries, _require_char0
from .algebra.upoly import UniPoly, series_inverse
from .errors import InexactDivision, PrecisionTooLow
from .maps import AffineEndo3
from .surfaces import StandardForm, is_danielewski


@dataclass(frozen=True)
class HenselDecomposition:
    h: int
    Q: Poly
    R1: Poly
    sigma: tuple
    R2: Poly
    leading: object

    @property
    def field(self):
        return self.Q.field

    @property
    def standard_form(self) -> StandardForm:
        return StandardForm(self.h, self.sigma, self.field)

    @property
    def P(self) -> Poly:
        return self.standard_form.P

    def residual(self) -> Poly:
        """``Q - R1 * P - x^h R2`` (zero for a correct decomposition)."""
        return self.Q - self.R1 * self.P - self.R2.shift("x", self.h)


def _eval_in_y(Q: Poly, s: UniPoly, prec: int) -> UniPoly:
    """``Q(x, s(x)) mod x^prec`` for ``Q`` in ``k[x, y]``."""
    field = Q.field
    out = UniPoly.zero(field)
    power = UniPoly.one(field)
    by_y = Q.coeffs_in("y")
    for k in range(max(by_y) + 1):
        if k in by_y:
            out = out + by_y[k].to_uni("x").mul_trunc(power, prec)
        power = power.mul_trunc(s, prec)
    return out.truncate(prec)


def precision_schedule(h: int, kind: str = "doubling") -> list:
    """Precisions used by Newton lifting: ``1, 2, 4, ...`` or ``1, 2, 3, ...`` up to ``h``."""
    if kind == "doubling":
        steps, p = [], 1
        while p < h:
            p = min(2 * p, h)
            steps.append(p)
        return steps
    if kind == "linear":
        return list(range(2, h + 1))
    raise ValueError(f"unknown schedule {kind!r}")


def lift_root(Q: Poly, y0, h: int, schedule: str = "doubling") -> UniPoly:
    """Unique ``sigma`` with ``sigma(0) = y0``, ``deg sigma < h`` and ``Q(x, sigma) = 0 mod x^h``."""
    field = Q.field
    dQ = Q.diff("y")
    s = UniPoly.constant(y0, field)
    for prec in precision_schedule(h, schedule):
        val = _eval_in_y(Q, s, prec)
        der = _eval_in_y(dQ, s, prec)
        s = (s - val.mul_trunc(series_inverse(der, prec), prec)).truncate(prec)
    if not _eval_in_y(Q, s, h).is_zero():
        raise InexactDivision("Newton lifting did not converge", y0=field.encode(field(y0)))
    return s


def hensel_standardize(h: int, Q: Poly, schedule: str = "doubling") -> HenselDecomposition:
    """Decompose ``Q = R1 * prod(y - sigma_i) + x^h R2`` (see the module docstring)."""
    Q = Q.embed(XY)
    field = Q.field
    report = is_danielewski(h, Q)
    sigma = tuple(lift_root(Q, y0, h, schedule) for y0 in report.roots)
    P = StandardForm(h, sigma, field).P
    r = len(sigma)
    y = Poly.var("y", XY, field)
    rem = Q.truncate("x", h)
    quo = Poly.zero(XY, field)
    while rem.degree("y") >= r:
        d = rem.degree("y")
        term = rem.coeff("y", d) * y ** (d - r)
        quo = quo + term
        rem = (rem - term * P).truncate("x", h)
    if not rem.is_zero():
        raise InexactDivision("prod(y - sigma_i) does not divide Q modulo x^h",
                              residual=str(rem))
    R1 = quo
    R2 = (Q - R1 * P).exact_shift_down("x", h)
    lead = R1.eval_var("x", 0)
    if not lead.is_constant() or lead.is_zero():
        raise InexactDivision("R1(0, y) is not a nonzero constant", R1=str(R1))
    dec = HenselDecomposition(h, Q, R1, sigma, R2, lead.constant_term())
    if not dec.residual().is_zero():
        raise InexactDivision("decomposition residual is nonzero", residual=str(dec.residual()))
    return dec


# -- conjugating maps --------------------------------------------------------

@dataclass(frozen=True)
class ConjugationPair:
    phi_up: AffineEndo3
    phi_down: AffineEndo3
    f: Poly
    g: Poly
    bezout_residual: Poly
    up_down_residuals: list
    down_up_residuals: list


def inverse_mod_x_power(R1: Poly, h: int) -> Poly:
    """Inverse of ``R1`` in ``(k[x]/x^h)[y]``, as the truncated geometric series.

    Requires ``R1(0, y)`` to be a nonzero constant ``lambda``; writing
    ``R1 = lambda (1 + x S)`` the inverse is ``lambda^-1 sum_k (-x S)^k``.
    """
    lam = R1.eval_var("x", 0).constant_term()
    u = R1 / lam - 1
    inv = Poly.one(R1.gens, R1.field)
    term = inv
    for _ in range(1, h):
        term = (-(term * u)).truncate("x", h)
        if term.is_zero():
            break
        inv = inv + term
    return inv / lam


def conjugation_pair(d: HenselDecomposition) -> ConjugationPair:
    """Mutually inverse maps between ``x^h z = Q`` and its standard form."""
    field, h = d.field, d.h
    f = inverse_mod_x_power(d.R1, h)
    bez = Poly.one(XY, field) - d.R1 * f
    g = bez.exact_shift_down("x", h)
    P = d.P
    x, y, z = Poly.gens_of(XYZ, field)
    up = AffineEndo3(x, y, d.R1.embed(XYZ) * z + d.R2.embed(XYZ))
    down = AffineEndo3(x, y, f.embed(XYZ) * z + (g * P - f * d.R2).embed(XYZ))
    ident = AffineEndo3.identity(field)
    res_up_down = (up @ down).residuals_mod(ident, h, d.Q)
    res_down_up = (down @ up).residuals_mod(ident, h, P)
    bezout_res = d.R1 * f + g.shift("x", h) - 1
    if not bezout_res.is_zero() or any(not r.is_zero() for r in res_up_down + res_down_up):
        raise InexactDivision("conjugating maps fail to be mutually inverse")
    return ConjugationPair(up, down, f, g, bezout_res, res_up_down, res_down_up)


# -- formal holomorphic witness ---------------------------------------------

@dataclass(frozen=True)
class HoloWitness:
    lam: object
    f: Poly
    order: int
    psi: tuple
    congruence_residual: Poly
    residual: Poly


def exp_witness(d: HenselDecomposition, order: int):
    """``(lambda, f, E)`` with ``E = lambda * exp(x f)`` truncated at ``x**order``."""
    _require_char0(d.field)
    lam = d.leading
    log = TruncatedSeries(d.R1 / lam, d.h).log()
    f = log.poly.exact_shift_down("x", 1)
    E = TruncatedSeries(log.poly, order).exp() * lam
    return lam, f, E


def holo_witness(d: HenselDecomposition, N: int) -> HoloWitness:
    """Formal map ``Psi`` with ``Psi^*(x^h z - Q) = lambda exp(x f) (x^h z - P)`` mod ``x^N``.

    ``Psi = (x, y, E z - x^-h (E - R1) P + R2)`` with ``E = lambda exp(x f)`` and
    ``x f`` the truncated logarithm of ``R1 / lambda`` modulo ``x^h``.
    """
    h = d.h
    if N < h:
        raise PrecisionTooLow(f"order {N} is below h = {h}", order=N, h=h)
    field = d.field
    lam, f, E = exp_witness(d, N + h)
    congruence = (E.poly - d.R1).truncate("x", h)
    shifted = (E.poly - d.R1).exact_shift_down("x", h)
    P = d.P
    x, y, z = Poly.gens_of(XYZ, field)
    psi_z = E.poly.embed(XYZ) * z - (shifted * P).embed(XYZ) + d.R2.embed(XYZ)
    psi = (x, y, psi_z.truncate("x", N))
    pulled = psi_z.shift("x", h) - d.Q.embed(XYZ)
    target = E.poly.embed(XYZ) * (z.shift("x", h) - P.embed(XYZ))
    residual = (pulled - target).truncate("x", N)
    return HoloWitness(lam, f, N, psi, congruence, residual)
