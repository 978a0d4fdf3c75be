import random

import pytest
from helpers import rand_standard_form, split_poly

from danielewski_lab.algebra import GF, QQ, Poly, UniPoly, parse_poly
from danielewski_lab.errors import (
    ConstantTermCollision,
    EmptyFiber,
    EmptyLevel,
    IdentityFailure,
    InvalidStandardForm,
    LeavesAtMixedLevels,
    MultipleRoot,
    NonMonic,
    NotSplit,
    RootAtZero,
    ZeroFiberPolynomial,
)
from danielewski_lab.surfaces import (
    CombSystem,
    StandardForm,
    comb_equation_count,
    comb_equations,
    comb_variables,
    is_danielewski,
    standard_to_tree,
    tree_to_standard,
    verify_comb_system,
)
from danielewski_lab.trees import FineWeightedTree, validate_tree

T = UniPoly([-1, 1])  # t - 1


def test_danielewski_predicate():
    rep = is_danielewski(2, parse_poly("y^2-1"))
    assert rep.r == 2 and set(rep.roots) == {1, -1} and rep.class_group_rank == 1
    rep = is_danielewski(2, parse_poly("(1-x)*(y^2-1)"))
    assert rep.r == 2 and set(rep.roots) == {1, -1}
    F5 = GF(5)
    assert is_danielewski(1, parse_poly("y^2+1", field=F5)).r == 2


@pytest.mark.parametrize("Q,error", [
    ("y^2", MultipleRoot),
    ("y^2-2", NotSplit),
    ("0", ZeroFiberPolynomial),
    ("x*y", ZeroFiberPolynomial),
    ("3 + x*y", EmptyFiber),
])
def test_danielewski_rejections(Q, error):
    with pytest.raises(error):
        is_danielewski(2, parse_poly(Q))


def test_multiple_root_reports_location():
    with pytest.raises(MultipleRoot) as info:
        is_danielewski(1, parse_poly("y^2"))
    assert info.value.details["y0"] == "0"


def test_standard_form_validation():
    with pytest.raises(ConstantTermCollision):
        StandardForm(2, (UniPoly([1]), UniPoly([1, 1])))
    with pytest.raises(InvalidStandardForm):
        StandardForm(2, (UniPoly([1, 0, 1]),))
    with pytest.raises(InvalidStandardForm):
        StandardForm(2, ())
    s = StandardForm(2, (UniPoly([1]), UniPoly([-1])))
    assert s.P == parse_poly("y^2-1")
    assert s.F == parse_poly("x^2*z - y^2 + 1", ("x", "y", "z"))


def test_standard_to_tree_example():
    t = standard_to_tree(StandardForm(2, (UniPoly([1]), UniPoly([-1]))))
    paths = sorted(tuple(t.path_weights(leaf)) for leaf in t.leaves())
    assert paths == [(-1, 0), (1, 0)]
    assert validate_tree(t).is_rake


def test_rake_round_trip():
    rng = random.Random(4)
    for _ in range(30):
        s = rand_standard_form(rng)
        back = tree_to_standard(standard_to_tree(s))
        assert back.h == s.h and set(back.sigma) == set(s.sigma)


def test_tree_to_standard_rejects_mixed_levels():
    comb = FineWeightedTree.from_nodes([(0, None, None), (1, 0, 0), (2, 0, 1), (3, 1, 0), (4, 1, 1)])
    with pytest.raises(LeavesAtMixedLevels):
        tree_to_standard(comb)


def test_classical_comb():
    c = comb_equations(1, [T])
    assert c.gens == ("x", "y-1", "z")
    assert c.equations == (parse_poly("x*z - y*(y-1)", ("x", "y", "z")).compose(
        [Poly.var(g, c.gens) for g in c.gens], c.gens),)
    assert all(r.is_zero() for r in verify_comb_system(c).residuals)


def test_h2_comb_equations():
    c = comb_equations(2, [T, T])
    gens = comb_variables(2)
    x, ym1, y0, z = (Poly.var(g, gens) for g in gens)
    expected = {
        x * z - y0 * (ym1 - 1) * (y0 - 1),
        z * ym1 - y0 ** 2 * (y0 - 1),
        x * y0 - ym1 * (ym1 - 1),
    }
    assert set(c.equations) == expected
    assert all(r.is_zero() for r in verify_comb_system(c).residuals)


def test_comb_equation_count():
    for h in range(1, 6):
        P_list = [UniPoly([-(l + 1), 1]) for l in range(h)]
        assert len(comb_equations(h, P_list).equations) == comb_equation_count(h)
    assert [comb_equation_count(h) for h in (1, 2, 3, 4)] == [1, 3, 6, 10]


def test_tampered_comb_is_caught():
    c = comb_equations(2, [T, T])
    eq = c.equations[1]
    exps, coeff = next(iter(eq.sorted_terms()))
    flipped = eq - 2 * Poly({exps: coeff}, c.gens)
    bad = CombSystem(c.h, c.P_list, (c.equations[0], flipped) + c.equations[2:], c.field)
    with pytest.raises(IdentityFailure):
        verify_comb_system(bad)


@pytest.mark.parametrize("P_list,error", [
    ([UniPoly([0, 1])], RootAtZero),
    ([UniPoly([1, 2])], NonMonic),
    ([UniPoly([1, 0, 1])], NotSplit),
    ([UniPoly([1, -2, 1])], MultipleRoot),
    ([UniPoly([1]), T], EmptyLevel),
])
def test_comb_rejections(P_list, error):
    with pytest.raises(error):
        comb_equations(len(P_list), P_list)


def test_permissive_comb_warns():
    c = comb_equations(2, [UniPoly([1]), T], permissive=True)
    assert c.warnings and "EmptyLevel" in c.warnings[0]
    assert all(r.is_zero() for r in verify_comb_system(c).residuals)


def test_random_combs_over_rationals():
    rng = random.Random(12)
    for _ in range(10):
        h = rng.randint(1, 3)
        c = comb_equations(h, [split_poly(rng, QQ, rng.randint(1, 2)) for _ in range(h)])
        assert all(r.is_zero() for r in verify_comb_system(c).residuals)
