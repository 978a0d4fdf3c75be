"""Membership tests for the principal ideal ``(x^h z - Q)``.

Because the generator is linear in ``z`` with coefficient ``x^h``, the quotient
``k[x,y,z]/(x^h z - Q)`` embeds in ``k[x, 1/x][y]`` via ``z -> Q / x^h``
whenever ``x`` does not divide ``x^h z - Q`` (always true when ``Q(0, y) != 0``).
An element therefore lies in the ideal exactly when that substitution gives 0.
"""

from __future__ import annotations

from .mpoly import XY, XYZ, Poly


def reduce_mod_surface(G: Poly, h: int, Q: Poly) -> Poly:
    """Image of ``G`` under ``z -> Q/x^h``, a Laurent polynomial in ``x`` over ``k[y]``.

    The result is zero iff ``G`` lies in the ideal generated by ``x^h z - Q``.
    """
    if h < 1:
        raise ValueError("h must be at least 1")
    G = G.embed(XYZ)
    Q = Q.embed(XY)
    out = Poly.zero(XY, G.field)
    q_power = Poly.one(XY, G.field)
    by_z = G.coeffs_in("z")
    for k in range(max(by_z) + 1 if by_z else 0):
        if k in by_z:
            coeff = _drop_z(by_z[k])
            out = out + (coeff * q_power).shift("x", -h * k)
        q_power = q_power * Q
    return out


def on_surface_residuals(components, h: int, Q: Poly) -> list:
    """Reduce each polynomial in ``components`` modulo the surface."""
    return [reduce_mod_surface(c, h, Q) for c in components]


def series_surface_residual(D: Poly, h: int, Q: Poly, order: int) -> Poly:
    """Check a difference of maps that is only known modulo ``x**order``.

    Returns ``x^(h*deg_z D) * D(x, y, Q/x^h)`` truncated at ``x**order``.  The
    scaling clears the denominators so the truncation is meaningful.
    """
    D = D.embed(XYZ)
    dz = max(D.degree("z"), 0)
    red = reduce_mod_surface(D, h, Q).shift("x", h * dz)
    return red.truncate("x", order)


def _drop_z(p: Poly) -> Poly:
    return Poly._raw({e[:2]: c for e, c in p.terms.items()}, XY, p.field)
