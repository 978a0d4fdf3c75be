"""JSON encodings of every object the command-line tool reads or writes.

Rationals are strings ``"p/q"`` (integers without a denominator), residues
modulo ``p`` are integers, and the field travels as a descriptor such as
``{"field": "Fp", "p": 5}``.  Polynomials are maps from monomial keys
(``"x^2*y"``, constant key ``"1"``) to coefficients; plain expression
strings such as ``"(1-x)*(y^2-1)"`` are also accepted on input.
"""

from __future__ import annotations

from .algebra.fields import parse_field
from .algebra.mpoly import XY, XYZ, Poly, parse_poly, poly_from_map
from .algebra.upoly import LaurentPoly, UniPoly
from .autos import AutDatum
from .maps import AffineEndo3
from .surfaces import StandardForm, SurfaceEquation
from .trees import FineWeightedTree


class MalformedInput(ValueError):
    """The JSON document does not follow the expected schema."""


def field_of(doc: dict, default):
    if isinstance(doc, dict) and "field" in doc:
        fld = doc["field"]
        return parse_field(fld if isinstance(fld, dict) else {"field": fld, "p": doc.get("p")})
    return default


# -- scalars and polynomials ------------------------------------------------

def encode_scalar(c, field):
    return field.encode(field(c))


def decode_scalar(v, field):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise MalformedInput(f"scalar must be an int or string, got {v!r}")
    try:
        return field(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"bad scalar {v!r}: {exc}") from None


def encode_poly(p: Poly) -> dict:
    return {p.monomial_key(e): p.field.encode(c) for e, c in p.sorted_terms()}


def encode_uni(u: UniPoly, var: str = "x") -> dict:
    return encode_poly(Poly.from_uni(u, var, (var,)))


def encode_laurent(u: LaurentPoly, var: str = "x") -> dict:
    terms = {(k,): c for k, c in u.terms().items()}
    return encode_poly(Poly(terms, (var,), u.field))


def decode_poly(data, gens, field) -> Poly:
    try:
        if isinstance(data, dict):
            return poly_from_map(data, gens, field)
        if isinstance(data, bool):
            raise MalformedInput("booleans are not polynomials")
        if isinstance(data, int):
            return Poly.constant(data, gens, field)
        if isinstance(data, str):
            return parse_poly(data, gens, field)
    except MalformedInput:
        raise
    except (ValueError, SyntaxError, ZeroDivisionError, TypeError) as exc:
        raise MalformedInput(f"bad polynomial {data!r}: {exc}") from None
    raise MalformedInput(f"bad polynomial {data!r}")


def decode_uni(data, var: str, field) -> UniPoly:
    p = decode_poly(data, (var,), field)
    if not p.is_polynomial():
        raise MalformedInput(f"negative exponent in {data!r}")
    return p.to_uni(var)


def encode_endo(m: AffineEndo3) -> dict:
    return {"x": encode_poly(m.X), "y": encode_poly(m.Y), "z": encode_poly(m.Z)}


def decode_endo(data, field) -> AffineEndo3:
    return AffineEndo3(*(decode_poly(data[k], XYZ, field) for k in ("x", "y", "z")))


# -- trees -------------------------------------------------------------------

def decode_tree(doc: dict, field) -> FineWeightedTree:
    field = field_of(doc, field)
    nodes = doc.get("nodes")
    if not isinstance(nodes, list):
        raise MalformedInput("tree needs a 'nodes' list")
    triples = []
    for n in nodes:
        if not isinstance(n, dict) or "id" not in n:
            raise MalformedInput(f"bad node {n!r}")
        par = n.get("parent")
        w = n.get("w")
        triples.append((n["id"], par, decode_scalar(w, field) if w is not None else None))
    return FineWeightedTree.from_nodes(triples, field)


def encode_tree(t: FineWeightedTree) -> dict:
    nodes = []
    for n in t.nodes:
        entry = {"id": n}
        if n in t.parent:
            entry["parent"] = t.parent[n]
            entry["w"] = t.field.encode(t.weight[n])
        nodes.append(entry)
    return {**t.field.descriptor(), "nodes": nodes}


# -- surfaces ----------------------------------------------------------------

def _h_of(doc) -> int:
    h = doc.get("h")
    if isinstance(h, bool) or not isinstance(h, int) or h < 1:
        raise MalformedInput(f"'h' must be a positive integer, got {h!r}")
    return h


def decode_surface(doc: dict, field):
    """A :class:`StandardForm` (``sigma`` key) or :class:`SurfaceEquation` (``Q`` key)."""
    if not isinstance(doc, dict):
        raise MalformedInput("surface must be an object")
    field = field_of(doc, field)
    h = _h_of(doc)
    if "sigma" in doc:
        if not isinstance(doc["sigma"], list):
            raise MalformedInput("'sigma' must be a list")
        return StandardForm(h, tuple(decode_uni(s, "x", field) for s in doc["sigma"]), field)
    if "Q" in doc:
        return SurfaceEquation(h, decode_poly(doc["Q"], XY, field))
    raise MalformedInput("surface needs 'sigma' or 'Q'")


def encode_standard(s: StandardForm) -> dict:
    return {**s.field.descriptor(), "h": s.h, "sigma": [encode_uni(u) for u in s.sigma]}


# -- automorphism data ---------------------------------------------------------

def decode_datum(doc: dict, field) -> AutDatum:
    try:
        alpha = tuple(int(i) - 1 for i in doc["alpha"])
        mu = decode_scalar(doc.get("mu", 1), field)
        a = decode_scalar(doc.get("a", 1), field)
        b = decode_uni(doc.get("b", {}), "x", field)
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad datum: {exc}") from None
    return AutDatum(alpha, mu, a, b)


def encode_datum(d: AutDatum) -> dict:
    f = d.field
    return {"alpha": [i + 1 for i in d.alpha], "mu": f.encode(d.mu), "a": f.encode(d.a),
            "b": encode_uni(d.b)}
