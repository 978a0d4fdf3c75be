"""Command-line front end: JSON in, JSON certificates out.

Usage::

    danielewski-lab standardize surface.json
    danielewski-lab isomorphic first.json second.json --pretty

Every success payload carries the residuals that were checked to be zero
next to an envelope identifying the input by its SHA-256.  A domain rejection
exits with status 2 and a body ``{"error": <kind>, ...}``; malformed input
exits with status 1.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .algebra.fields import parse_field
from .algebra.mpoly import XY
from .algebra.reduction import reduce_mod_surface
from .autos import (
    classify_generators,
    compose_data,
    datum_to_endo,
    datum_validate,
    ga_action,
    gm_action_exists,
    iso_decide,
    nonextendable_family,
    obstruction_compare,
    singular_values,
)
from .errors import DanielewskiError
from .maps import AffineEndo3
from .serialization import (
    MalformedInput,
    decode_datum,
    decode_poly,
    decode_scalar,
    decode_surface,
    decode_tree,
    decode_uni,
    encode_datum,
    encode_endo,
    encode_laurent,
    encode_poly,
    encode_standard,
    encode_tree,
    encode_uni,
    field_of,
)
from .standardize import conjugation_pair, hensel_standardize, holo_witness
from .surfaces import (
    StandardForm,
    comb_equation_count,
    comb_equations,
    defining_polynomial,
    is_danielewski,
    standard_to_tree,
    tree_to_standard,
    verify_comb_system,
)
from .trees import comb_from_tree, sigma_from_tree, transition_atlas, validate_tree

SCHEMA = "danielewski-lab/1"


def _all_zero(polys) -> bool:
    return all(p.is_zero() for p in polys)


def _residuals(polys) -> list:
    return [encode_poly(p) for p in polys]


def _as_standard(surface) -> tuple:
    """``(standard form, decomposition or None)`` for either surface presentation."""
    if isinstance(surface, StandardForm):
        return surface, None
    dec = hensel_standardize(surface.h, surface.Q)
    return dec.standard_form, dec


def _require(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInput(f"missing key {key!r}")
    return doc[key]


# -- commands ----------------------------------------------------------------

def cmd_validate_tree(doc, opts):
    t = decode_tree(doc, opts.field)
    shape = validate_tree(t)
    atlas = transition_atlas(t)
    return {
        "is_chain": shape.is_chain, "is_comb": shape.is_comb, "is_rake": shape.is_rake,
        "is_special": shape.is_special, "height": shape.height,
        "leaf_levels": shape.leaf_levels, "level1_count": shape.level1_count,
        "leaves": [{"leaf": lp.leaf, "level": lp.level, "sigma": encode_uni(lp.sigma)}
                   for lp in sigma_from_tree(t)],
        "transitions": [{"i": i + 1, "j": j + 1, "f": encode_laurent(f), "g": encode_laurent(g)}
                        for (i, j), (f, g) in sorted(atlas.pairs.items())],
        "cocycle_residuals_zero": all(r.is_zero() for r in atlas.cocycle_residuals().values()),
    }


def cmd_tree_to_surface(doc, opts):
    t = decode_tree(doc, opts.field)
    s = tree_to_standard(t)
    rep = is_danielewski(s.h, s.P)
    return {"surface": encode_standard(s), "P": encode_poly(s.P), "r": rep.r,
            "class_group_rank": rep.class_group_rank}


def cmd_surface_to_tree(doc, opts):
    s, _ = _as_standard(decode_surface(doc, opts.field))
    t = standard_to_tree(s)
    back = tree_to_standard(t)
    exact = back.h == s.h and set(back.sigma) == set(s.sigma)
    return {"tree": encode_tree(t), "round_trip_exact": exact}


def cmd_standardize(doc, opts):
    surf = decode_surface(doc, opts.field)
    s, dec = _as_standard(surf)
    if dec is None:
        dec = hensel_standardize(s.h, s.P)
    pair = conjugation_pair(dec)
    rep = is_danielewski(dec.h, dec.Q)
    return {
        "h": dec.h, "r": rep.r, "roots": [dec.field.encode(v) for v in rep.roots],
        "class_group_rank": rep.class_group_rank,
        "sigma": [encode_uni(u) for u in dec.sigma],
        "R1": encode_poly(dec.R1), "R2": encode_poly(dec.R2),
        "bezout": {"f": encode_poly(pair.f), "g": encode_poly(pair.g)},
        "residual": encode_poly(dec.residual()),
    }


def cmd_conjugation(doc, opts):
    surf = decode_surface(doc, opts.field)
    s, dec = _as_standard(surf)
    if dec is None:
        dec = hensel_standardize(s.h, s.P)
    pair = conjugation_pair(dec)
    return {
        "phi_up": encode_endo(pair.phi_up), "phi_down": encode_endo(pair.phi_down),
        "bezout": {"f": encode_poly(pair.f), "g": encode_poly(pair.g)},
        "bezout_residual": encode_poly(pair.bezout_residual),
        "up_down_residuals": _residuals(pair.up_down_residuals),
        "down_up_residuals": _residuals(pair.down_up_residuals),
    }


def cmd_holo_witness(doc, opts):
    surf = decode_surface(doc, opts.field)
    s, dec = _as_standard(surf)
    if dec is None:
        dec = hensel_standardize(s.h, s.P)
    w = holo_witness(dec, opts.order)
    return {
        "lambda": dec.field.encode(w.lam), "f": encode_poly(w.f), "order": w.order,
        "psi": encode_endo(AffineEndo3(*w.psi)),
        "congruence_residual": encode_poly(w.congruence_residual),
        "residual": encode_poly(w.residual),
    }


def _pair(docs, opts):
    if len(docs) == 1:
        doc = docs[0]
        return (decode_surface(_require(doc, "first"), field_of(doc, opts.field)),
                decode_surface(_require(doc, "second"), field_of(doc, opts.field)))
    return decode_surface(docs[0], opts.field), decode_surface(docs[1], opts.field)


def cmd_isomorphic(docs, opts):
    a, b = _pair(docs, opts)
    s1, _ = _as_standard(a)
    s2, _ = _as_standard(b)
    w = iso_decide(s1, s2)
    if w is None:
        return {"isomorphic": False, "h": [s1.h, s2.h], "r": [s1.r, s2.r]}
    f = s1.field
    return {
        "isomorphic": True,
        "witness": {"a": f.encode(w.a), "mu": f.encode(w.mu), "tau": encode_uni(w.tau),
                    "alpha": [i + 1 for i in w.alpha]},
        "residual": encode_poly(w.residual),
    }


def _surface_and_datum(doc, opts, key="datum"):
    field = field_of(doc, opts.field)
    s, _ = _as_standard(decode_surface(_require(doc, "surface"), field))
    return s, decode_datum(_require(doc, key), s.field)


def cmd_aut_validate(doc, opts):
    s, d = _surface_and_datum(doc, opts)
    c = datum_validate(s, d)
    endo = datum_to_endo(s, d)
    F = s.F
    return {"c": encode_uni(c), "endo": encode_endo(endo),
            "pullback_residual": encode_poly(endo.pullback(F) - F * d.mu ** s.r)}


def cmd_aut_compose(doc, opts):
    s, d1 = _surface_and_datum(doc, opts, "d1")
    d2 = decode_datum(_require(doc, "d2"), s.field)
    d = compose_data(s, d1, d2)
    lhs = datum_to_endo(s, d)
    rhs = datum_to_endo(s, d2) @ datum_to_endo(s, d1)
    return {"datum": encode_datum(d), "endo": encode_endo(lhs),
            "homomorphism_residuals": _residuals(lhs - rhs)}


def cmd_aut_generators(doc, opts):
    s, _ = _as_standard(decode_surface(doc, opts.field))
    rep = classify_generators(s)
    f = s.field
    out = {"always_a": True, "f": rep.f_flag, "warnings": list(rep.warnings)}
    out["b"] = {"tau": encode_uni(rep.b_witness.tau)} if rep.b_witness else None
    out["c"] = ({"tau": encode_uni(rep.c_witness.tau), "q0": rep.c_witness.q0}
                if rep.c_witness else None)
    out["d"] = ({"tau": encode_uni(rep.d_witness.tau), "s": rep.d_witness.s,
                 "i": rep.d_witness.i, "mu": f.encode(rep.d_witness.mu)}
                if rep.d_witness else None)
    out["e"] = ({"c": encode_uni(rep.e_witness.c), "s": rep.e_witness.s}
                if rep.e_witness else None)
    F = s.F
    out["generators"] = {
        name: {"map": encode_endo(m),
               "surface_residual": encode_poly(reduce_mod_surface(m.pullback(F), s.h, s.P))}
        for name, m in rep.generators.items()}
    return out


def cmd_gm_exists(doc, opts):
    s, _ = _as_standard(decode_surface(doc, opts.field))
    tau = gm_action_exists(s)
    return {"exists": tau is not None, "tau": encode_uni(tau) if tau is not None else None}


def cmd_ga_orbit(doc, opts):
    field = field_of(doc, opts.field)
    h = doc.get("h")
    if not isinstance(h, int) or isinstance(h, bool) or h < 1:
        raise MalformedInput("'h' must be a positive integer")
    Q = decode_poly(_require(doc, "Q"), XY, field)
    b = decode_uni(_require(doc, "b"), "x", field)
    t = decode_scalar(_require(doc, "t"), field)
    m = ga_action(h, Q, b, t)
    F = defining_polynomial(h, Q)
    out = {"map": encode_endo(m),
           "surface_residual": encode_poly(reduce_mod_surface(m.pullback(F), h, Q))}
    if "t_prime" in doc:
        t2 = decode_scalar(doc["t_prime"], field)
        lhs = m @ ga_action(h, Q, b, t2)
        out["group_law_residuals"] = _residuals(lhs - ga_action(h, Q, b, t + t2))
    return out


def cmd_nonextendable(doc, opts):
    field = field_of(doc, opts.field)
    h = doc.get("h")
    if not isinstance(h, int) or isinstance(h, bool):
        raise MalformedInput("'h' must be an integer")
    P = decode_uni(_require(doc, "P"), "y", field)
    a = decode_scalar(_require(doc, "a"), field)
    a2 = decode_scalar(doc["a_prime"], field) if "a_prime" in doc else None
    rep = nonextendable_family(h, P, a, opts.order, a2)
    out = {
        "theta": encode_endo(rep.theta), "x_component_is_ax": rep.x_component_ok,
        "surface_residual": encode_poly(rep.surface_residual),
        "phi_a": encode_endo(rep.phi_a), "order": rep.order,
        "series_residual": encode_poly(rep.series_residual),
    }
    if rep.group_law_residuals is not None:
        out["group_law_residuals"] = _residuals(rep.group_law_residuals)
    if rep.involution_residuals is not None:
        out["involution_residuals"] = _residuals(rep.involution_residuals)
        out["involution_factor_residual"] = encode_poly(rep.involution_factor_residual)
    return out


def cmd_singular_values(doc, opts):
    field = field_of(doc, opts.field)

    def hq(d):
        surf = decode_surface(d, field)
        if isinstance(surf, StandardForm):
            return surf.h, surf.P
        return surf.h, surf.Q

    if "first" in doc:
        A, B = hq(doc["first"]), hq(doc["second"])
        strict = bool(doc.get("strict", False))
        return {"first": [field.encode(v) for v in singular_values(*A)],
                "second": [field.encode(v) for v in singular_values(*B)],
                "verdict": obstruction_compare(A, B, strict=strict), "strict": strict}
    return {"values": [field.encode(v) for v in singular_values(*hq(doc))]}


def _comb_system(doc, opts):
    field = field_of(doc, opts.field)
    if "nodes" in doc:
        h, P_list, _ = comb_from_tree(decode_tree(doc, field), opts.permissive_comb)
    else:
        h = doc.get("h")
        if not isinstance(h, int) or isinstance(h, bool):
            raise MalformedInput("'h' must be an integer")
        P_list = [decode_uni(p, "t", field) for p in _require(doc, "P")]
    return comb_equations(h, P_list, opts.permissive_comb)


def cmd_comb_embed(doc, opts):
    c = _comb_system(doc, opts)
    return {"h": c.h, "variables": list(c.gens),
            "P": [encode_uni(p, "t") for p in c.P_list],
            "equations": [encode_poly(e) for e in c.equations],
            "equation_count": len(c.equations),
            "expected_count": comb_equation_count(c.h), "warnings": list(c.warnings)}


def cmd_comb_verify(doc, opts):
    c = _comb_system(doc, opts)
    v = verify_comb_system(c)
    return {"h": c.h, "equation_count": len(c.equations),
            "residuals": _residuals(v.residuals), "verified": _all_zero(v.residuals),
            "warnings": list(c.warnings)}


COMMANDS = {
    "validate-tree": cmd_validate_tree,
    "tree-to-surface": cmd_tree_to_surface,
    "surface-to-tree": cmd_surface_to_tree,
    "standardize": cmd_standardize,
    "conjugation": cmd_conjugation,
    "holo-witness": cmd_holo_witness,
    "isomorphic": cmd_isomorphic,
    "aut-validate": cmd_aut_validate,
    "aut-compose": cmd_aut_compose,
    "aut-generators": cmd_aut_generators,
    "gm-exists": cmd_gm_exists,
    "ga-orbit": cmd_ga_orbit,
    "nonextendable": cmd_nonextendable,
    "singular-values": cmd_singular_values,
    "comb-embed": cmd_comb_embed,
    "comb-verify": cmd_comb_verify,
}

PAIR_COMMANDS = {"isomorphic"}

HELP = {
    "validate-tree": "check the fine condition, classify the shape, build the chart atlas",
    "tree-to-surface": "standard form of a rake whose branches split at the root",
    "surface-to-tree": "rake of a surface (standardized first when given by Q)",
    "standardize": "Hensel decomposition Q = R1 * prod(y - sigma_i) + x^h R2",
    "conjugation": "mutually inverse maps between a surface and its standard form",
    "holo-witness": "exponential witness of a formal equivalence, checked mod x^N",
    "isomorphic": "decide isomorphism of two surfaces and return a witness",
    "aut-validate": "validate an automorphism datum and build its map",
    "aut-compose": "compose two automorphism data",
    "aut-generators": "classify the generator families of the automorphism group",
    "gm-exists": "decide existence of a multiplicative group action",
    "ga-orbit": "additive group action on x^h z = Q",
    "nonextendable": "non-extendable scalings of x^h z = (1 - x) P(y)",
    "singular-values": "singular level values, or compare two surfaces by them",
    "comb-embed": "equations of a comb surface in affine (h+2)-space",
    "comb-verify": "verify a comb system over the punctured line",
}


# -- driver --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="danielewski-lab",
        description="Exact verification of Danielewski surfaces and their automorphisms.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="+", help="JSON input files ('-' for stdin)")
    common.add_argument("--field", default="Q", help="base field: Q or Fp:<p> (default Q)")
    common.add_argument("--order", type=int, default=8,
                        help="truncation order N for series checks (default 8)")
    common.add_argument("--permissive-comb", action="store_true",
                        help="allow comb levels without leaves (P_l = 1)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed recorded in the output for reproducible runs")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, fn in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=HELP[name])
    return parser


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _envelope(command, raw: bytes, opts) -> dict:
    return {"schema": SCHEMA, "command": command, "version": __version__,
            "input_sha256": hashlib.sha256(raw).hexdigest(),
            "field": opts.field.descriptor(), "order": opts.order, "seed": opts.seed}


def run_unit(command: str, raws: list, opts) -> tuple:
    """Run one unit of work; returns ``(exit_code, payload)``."""
    env = _envelope(command, b"".join(raws), opts)
    try:
        docs = [json.loads(r) for r in raws]
        if command in PAIR_COMMANDS:
            result = COMMANDS[command](docs, opts)
        else:
            result = COMMANDS[command](docs[0], opts)
    except DanielewskiError as exc:
        return 2, {**env, "error": exc.kind, "message": str(exc),
                   "details": _jsonable(exc.details)}
    except (MalformedInput, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        return 1, {**env, "error": "MalformedInput", "message": str(exc)}
    return 0, {**env, "result": result}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    return str(obj)


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    try:
        opts.field = parse_field(opts.field)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        raws = [_read(p) for p in opts.inputs]
    except OSError as exc:
        print(json.dumps({"schema": SCHEMA, "error": "MalformedInput", "message": str(exc)}))
        return 1
    if opts.command in PAIR_COMMANDS and len(raws) == 2:
        units = [raws]
    else:
        units = [[r] for r in raws]
    results = [run_unit(opts.command, u, opts) for u in units]
    indent = 2 if opts.pretty else None
    payloads = [p for _, p in results]
    out = payloads[0] if len(payloads) == 1 else payloads
    print(json.dumps(out, indent=indent, sort_keys=False))
    return next((code for code, _ in results if code), 0)


if __name__ == "__main__":
    sys.exit(main())
