import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from danielewski_lab.algebra import (
    GF,
    QQ,
    XY,
    XYZ,
    LaurentPoly,
    Poly,
    TruncatedSeries,
    UniPoly,
    multiplicative_order,
    nth_roots,
    parse_field,
    parse_poly,
    poly_gcd,
    reduce_mod_surface,
    roots_in_field,
    roots_of_unity,
    series_exp_log,
    series_inverse,
)
from danielewski_lab.algebra.upoly import integer_nth_root
from danielewski_lab.errors import FieldMismatch, InexactDivision, PositiveCharacteristic
from danielewski_lab.surfaces import defining_polynomial

X, Y = sympy.symbols("x y")
small = st.integers(-6, 6)
coeff_lists = st.lists(small, max_size=5)


def to_sympy(p: Poly):
    syms = sympy.symbols(" ".join(p.gens))
    syms = syms if isinstance(syms, tuple) else (syms,)
    out = 0
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return sympy.expand(out)


bipolys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small, max_size=5).map(
    lambda d: Poly(d, XY, QQ))


# -- fields -----------------------------------------------------------------

def test_prime_field_arithmetic():
    F7 = GF(7)
    assert F7(3) * F7(5) == F7(1)
    assert F7(1) / F7(3) == F7(5)
    assert F7(-1) == F7(6)
    assert F7(2) ** -1 == F7(4)
    assert GF(7) is F7
    assert sorted(F7.elements(), key=F7.sort_key)[0] == 0


def test_parse_field_forms():
    assert parse_field("Q") is QQ
    assert parse_field("Fp:5") == GF(5)
    assert parse_field({"field": "Fp", "p": 11}) == GF(11)
    with pytest.raises(ValueError):
        parse_field("Fp:6")


def test_multiplicative_order():
    assert multiplicative_order(GF(5)(2), 4) == 4
    assert multiplicative_order(GF(5)(4), 4) == 2
    assert multiplicative_order(QQ(2), 10) is None


def test_rational_encoding():
    assert QQ.encode(Fraction(-1, 2)) == "-1/2"
    assert QQ("3/4") == Fraction(3, 4)
    assert GF(5).encode(GF(5)(7)) == 2


# -- univariate polynomials -------------------------------------------------

@given(coeff_lists, coeff_lists, coeff_lists)
def test_uni_ring_axioms(a, b, c):
    A, B, C = UniPoly(a), UniPoly(b), UniPoly(c)
    assert (A + B) + C == A + (B + C)
    assert A * (B + C) == A * B + A * C
    assert A * B == B * A
    assert A - A == UniPoly.zero()


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_uni_divmod(a, b):
    A, B = UniPoly(a), UniPoly(b)
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


@given(coeff_lists, coeff_lists)
def test_uni_product_matches_sympy(a, b):
    prod = UniPoly(a) * UniPoly(b)
    ref = sympy.Poly(sympy.Poly(a[::-1] or [0], X) * sympy.Poly(b[::-1] or [0], X), X)
    assert [Fraction(int(c)) for c in reversed(ref.all_coeffs())] == (list(prod.coeffs) or [0])


def test_uni_scale_and_call():
    p = UniPoly([1, 2, 3])
    assert p.scale(2) == UniPoly([1, 4, 12])
    assert p(2) == 17
    assert p.derivative() == UniPoly([2, 6])
    assert p.truncate(2) == UniPoly([1, 2])


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=4, unique=True))
def test_rational_roots_match_sympy(roots):
    p = UniPoly.from_roots(roots) * UniPoly([1, 0, 1])
    rep = roots_in_field(p)
    expected = {Fraction(int(r)) for r in sympy.Poly(to_sympy(Poly.from_uni(p, "x", ("x",))), X)
                .ground_roots()}
    assert set(rep.roots) == expected == {Fraction(r) for r in roots}
    assert not rep.splits_simply


def test_roots_over_small_prime_field():
    F5 = GF(5)
    rep = roots_in_field(UniPoly([1, 0, 1], F5))
    assert set(rep.roots) == {F5(2), F5(3)}
    assert rep.splits_simply


def test_cantor_zassenhaus_matches_brute_force():
    Fp = GF(2003)
    rng = random.Random(3)
    for _ in range(5):
        roots = rng.sample(range(2003), 4)
        p = UniPoly.from_roots(roots, Fp) * UniPoly([2, 0, 1], Fp)
        brute = {Fp(v) for v in range(2003) if not p(Fp(v))}
        assert set(roots_in_field(p, seed=1).roots) == brute


def test_large_prime_roots():
    Fp = GF(1000003)
    p = UniPoly.from_roots([5, 17, 999999], Fp)
    assert set(roots_in_field(p).roots) == {Fp(5), Fp(17), Fp(999999)}


def test_nth_roots_and_unity():
    assert nth_roots(Fraction(9, 4), 2, QQ) == [Fraction(-3, 2), Fraction(3, 2)]
    assert nth_roots(Fraction(2), 2, QQ) == []
    F5 = GF(5)
    assert set(nth_roots(F5(1), 4, F5)) == {F5(1), F5(2), F5(3), F5(4)}
    assert set(roots_of_unity(F5, 4)) == {F5(2), F5(3), F5(4)}
    assert roots_of_unity(QQ, 4) == [Fraction(-1)]
    assert integer_nth_root(27, 3) == 3
    assert integer_nth_root(28, 3) is None


def test_gcd_and_series_inverse():
    a = UniPoly.from_roots([1, 2, 3])
    b = UniPoly.from_roots([2, 3, 5])
    assert poly_gcd(a, b) == UniPoly.from_roots([2, 3])
    u = UniPoly([1, -1])
    assert series_inverse(u, 5) == UniPoly([1, 1, 1, 1, 1])


def test_laurent_poly():
    g = LaurentPoly(-2, UniPoly([1, 1]))
    assert not g.is_regular()
    assert g.times_x_power(2).is_regular()
    assert (g - g).is_zero()


# -- multivariate polynomials -----------------------------------------------

@given(bipolys, bipolys, bipolys)
@settings(max_examples=60)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(bipolys, bipolys)
@settings(max_examples=60)
def test_poly_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(bipolys, bipolys)
@settings(max_examples=40)
def test_compose_matches_sympy(a, b):
    x = Poly.var("x")
    comp = a.compose([x, b], XY)
    assert to_sympy(comp) == sympy.expand(to_sympy(a).subs(Y, to_sympy(b)))


def test_parse_poly():
    p = parse_poly("(1-x)*(y^2-1)")
    assert p == Poly({(0, 2): 1, (0, 0): -1, (1, 2): -1, (1, 0): 1})
    assert parse_poly("x**7", ("x",), GF(5)) == Poly({(7,): 1}, ("x",), GF(5))
    assert parse_poly("y/2 + 3") == Poly({(0, 1): Fraction(1, 2), (0, 0): 3})
    with pytest.raises(ValueError):
        parse_poly("w + 1")


def test_poly_structural_helpers():
    p = parse_poly("x^3*y + 2*x*y^2 + 5")
    assert p.degree("y") == 2 and p.degree("x") == 3
    assert p.truncate("x", 2) == parse_poly("2*x*y^2 + 5")
    assert p.diff("y") == parse_poly("x^3 + 4*x*y")
    assert p.eval_var("x", 0) == Poly.constant(5)
    assert parse_poly("x^3 + x^2*y").exact_shift_down("x", 2) == parse_poly("x + y")
    with pytest.raises(InexactDivision):
        parse_poly("x + 1").exact_shift_down("x", 1)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Poly.one(XY, QQ) + Poly.one(XY, GF(5))


# -- reduction modulo a surface -------------------------------------------

@given(bipolys, st.integers(1, 3))
@settings(max_examples=40)
def test_reduction_kills_ideal(b, h):
    Q = parse_poly("(1-x)*(y^2-1)")
    F = defining_polynomial(h, Q)
    A = parse_poly("x*z + y^2 - z^2", XYZ)
    B = b.embed(XYZ)
    assert reduce_mod_surface(A * F + B, h, Q) == reduce_mod_surface(B, h, Q)
    assert reduce_mod_surface(F, h, Q).is_zero()


def test_involution_factorization_in_sympy():
    x, y, z = sympy.symbols("x y z")
    f1 = x ** 2 * z - (1 - x) * (y ** 2 - 1)
    J = {x: -x, y: y, z: (1 + x) * ((1 + x) * z + y ** 2 - 1)}
    assert sympy.expand(f1.subs(J, simultaneous=True) - (1 + x) ** 2 * f1) == 0


# -- truncated series ---------------------------------------------------------

@given(st.lists(small, min_size=1, max_size=4), st.integers(2, 16))
@settings(max_examples=40)
def test_exp_log_round_trip(coeffs, N):
    u = TruncatedSeries(Poly({(k + 1, 0): c for k, c in enumerate(coeffs)}, XY), N)
    assert u.exp().log() == u
    v = TruncatedSeries(Poly.one(XY) + u.poly, N)
    assert v.log().exp() == v


def test_exp_matches_sympy():
    s = series_exp_log(TruncatedSeries(-Poly.var("x"), 6), "exp")
    ref = sympy.series(sympy.exp(-X), X, 0, 6).removeO()
    assert to_sympy(s.poly) == sympy.expand(ref)


def test_exp_needs_characteristic_zero():
    F5 = GF(5)
    with pytest.raises(PositiveCharacteristic):
        TruncatedSeries(Poly.var("x", XY, F5), 4).exp()
