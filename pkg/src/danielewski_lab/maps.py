"""Polynomial endomorphisms of affine 3-space given by coordinate images."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.mpoly import XYZ, Poly
from .algebra.reduction import reduce_mod_surface


@dataclass(frozen=True)
class AffineEndo3:
    """The map ``(x, y, z) -> (X, Y, Z)``.

    Composition follows function notation: ``(A @ B)(p) = A(B(p))``, so the
    coordinates of ``A @ B`` are the components of ``A`` evaluated at ``B``.
    """

    X: Poly
    Y: Poly
    Z: Poly

    def __post_init__(self):
        for name in ("X", "Y", "Z"):
            object.__setattr__(self, name, getattr(self, name).embed(XYZ))

    @classmethod
    def identity(cls, field) -> "AffineEndo3":
        return cls(*Poly.gens_of(XYZ, field))

    @property
    def field(self):
        return self.X.field

    @property
    def components(self) -> tuple:
        return (self.X, self.Y, self.Z)

    def pullback(self, G: Poly) -> Poly:
        """``G`` composed with this map, i.e. ``G(X, Y, Z)``."""
        return G.embed(XYZ).compose(self.components, XYZ)

    def compose(self, inner: "AffineEndo3") -> "AffineEndo3":
        """``self`` after ``inner``."""
        return AffineEndo3(*(inner.pullback(c) for c in self.components))

    __matmul__ = compose

    def __sub__(self, other: "AffineEndo3") -> tuple:
        return tuple(a - b for a, b in zip(self.components, other.components))

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.components)

    def residuals_mod(self, other: "AffineEndo3", h: int, Q: Poly) -> list:
        """Coordinatewise differences reduced modulo ``x^h z - Q``."""
        return [reduce_mod_surface(d, h, Q) for d in self - other]

    def congruent_mod(self, other: "AffineEndo3", h: int, Q: Poly) -> bool:
        return all(r.is_zero() for r in self.residuals_mod(other, h, Q))

    def __str__(self):
        return f"({self.X}, {self.Y}, {self.Z})"
