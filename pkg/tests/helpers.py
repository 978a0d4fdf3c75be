"""Random data families shared by the test modules.

Every generator takes a ``random.Random`` so that runs are reproducible.
Coefficients are drawn from ``[-HEIGHT, HEIGHT]`` and reduced into the field.
"""

import random
from contextlib import contextmanager

from hypothesis import strategies as st

from danielewski_lab.algebra import GF, QQ, Poly, UniPoly, multiplicative_order
from danielewski_lab.autos import AutDatum
from danielewski_lab.surfaces import StandardForm
from danielewski_lab.trees import FineWeightedTree

HEIGHT = 10
F5 = GF(5)

# criterion number -> "PASS" / "FAIL"; printed by conftest at the end of the run
CRITERIA: dict = {}

# hypothesis strategy for reproducible generators: shrinks towards small seeds
rngs = st.integers(0, 2**31 - 1).map(random.Random)


@contextmanager
def criterion(n: int, title: str):
    try:
        yield
    except BaseException:
        CRITERIA[n] = ("FAIL", title)
        print(f"criterion {n}: FAIL  {title}")
        raise
    CRITERIA[n] = ("PASS", title)
    print(f"criterion {n}: PASS  {title}")


def rand_scalar(rng, field, nonzero=False):
    while True:
        c = field(rng.randint(-HEIGHT, HEIGHT))
        if c or not nonzero:
            return c


def rand_uni(rng, field, max_deg, min_deg=0):
    deg = rng.randint(min_deg, max_deg) if max_deg >= min_deg else -1
    return UniPoly([rand_scalar(rng, field) for _ in range(deg + 1)], field)


def distinct_scalars(rng, field, n, exclude=()):
    out = []
    while len(out) < n:
        c = rand_scalar(rng, field)
        if c not in out and c not in exclude:
            out.append(c)
    return out


def rand_standard_form(rng, field=QQ, max_r=4, max_h=4, r=None, h=None) -> StandardForm:
    h = h or rng.randint(1, max_h)
    r = r or rng.randint(1, max_r)
    consts = distinct_scalars(rng, field, r)
    sigma = [UniPoly([c] + [rand_scalar(rng, field) for _ in range(h - 1)], field)
             for c in consts]
    return StandardForm(h, tuple(sigma), field)


def gm_standard_form(rng, field=QQ, max_r=4, max_h=4) -> StandardForm:
    """``sigma_i = m_i + tau`` with one common ``tau`` vanishing at 0."""
    h = rng.randint(1, max_h)
    r = rng.randint(1, max_r)
    tau = UniPoly([0] + [rand_scalar(rng, field) for _ in range(h - 1)], field)
    sigma = [tau + c for c in distinct_scalars(rng, field, r)]
    return StandardForm(h, tuple(sigma), field)


# -- valid automorphism data -------------------------------------------------

def _mu_choices(field):
    if field.characteristic == 0:
        return [QQ(1), QQ(-1)]
    return [field(1), field(2), field(4)]


def _a_order(field, a):
    if field.characteristic == 0:
        return {1: 1, -1: 2}.get(a)
    return multiplicative_order(a, field.characteristic)


def _orbit_reps(field, mu, k, rng):
    """``k`` scalars lying in pairwise distinct nonzero ``mu``-orbits."""
    reps, used = [], set()
    s = multiplicative_order(mu, 16)
    tries = 0
    while len(reps) < k:
        tries += 1
        if tries > 500:
            return None
        c = rand_scalar(rng, field, nonzero=True)
        orbit = {c * mu ** j for j in range(s)}
        if orbit & used:
            continue
        used |= orbit
        reps.append(c)
    return reps


def valid_family(rng, field, max_r=4, max_h=4):
    """A standard form with the parameters ``(mu, s, a_order)`` of its symmetric data.

    Branches are ``sigma_i = tau + g_i`` where ``g_i`` lies in ``k[x^q]`` and
    ``g`` is multiplied by ``mu`` along each cycle of length ``s = ord(mu)``.
    Every datum ``(alpha^j, mu^j, a, b)`` with ``a^q = 1`` is then valid, and
    ``a`` is free when all ``g_i`` are constants.
    """
    h = rng.randint(1, max_h)
    mu = rng.choice(_mu_choices(field))
    s = multiplicative_order(mu, 16)
    r_max = max_r
    if s == 1:
        r = rng.randint(1, r_max)
        cycles, fixed = 0, r
    else:
        cycles = rng.randint(1, max(1, r_max // s))
        fixed = rng.randint(0, 1) if cycles * s < r_max else 0
        r = cycles * s + fixed
    # q = order of the admissible scalings of x; 0 means "g_i constant, a free"
    q = rng.choice([0, 0, 1, 2])
    if field.characteristic == 5 and q == 2:
        q = rng.choice([2, 4])
    tau = rand_uni(rng, field, h - 1)
    reps = _orbit_reps(field, mu, cycles, rng) if s > 1 else distinct_scalars(rng, field, r)
    if reps is None:
        return None

    def g_poly(c0):
        coeffs = [c0] + [field.zero] * (h - 1)
        if q:
            for e in range(q, h, q):
                coeffs[e] = rand_scalar(rng, field)
        return UniPoly(coeffs, field)

    sigma, alpha = [], []
    if s == 1:
        sigma = [tau + g_poly(c) for c in reps]
        alpha = list(range(r))
    else:
        for c in reps:
            g = g_poly(c)
            start = len(sigma)
            for j in range(s):
                sigma.append(tau + g * mu ** j)
                alpha.append(start + (j + 1) % s)
        if fixed:
            sigma.append(tau)
            alpha.append(len(sigma) - 1)
    sf = StandardForm(h, tuple(sigma), field)
    return sf, tuple(alpha), mu, q


def _perm_power(alpha, j):
    out = list(range(len(alpha)))
    for _ in range(j):
        out = [alpha[i] for i in out]
    return tuple(out)


def rand_a(rng, field, q):
    if q == 0:
        return rand_scalar(rng, field, nonzero=True)
    candidates = [c for c in (range(1, 5) if field.characteristic == 5 else (1, -1))
                  if _a_order(field, field(c)) and q % _a_order(field, field(c)) == 0]
    return field(rng.choice(candidates))


def rand_valid_datum(rng, family, max_b_deg=3) -> AutDatum:
    sf, alpha, mu, q = family
    s = multiplicative_order(mu, 16)
    j = rng.randrange(s)
    return AutDatum(_perm_power(alpha, j), mu ** j, rand_a(rng, sf.field, q),
                    rand_uni(rng, sf.field, max_b_deg))


# -- trees ----------------------------------------------------------------------

def rand_fine_tree(rng, field=QQ, max_nodes=12) -> FineWeightedTree:
    n = rng.randint(1, max_nodes)
    nodes = [(0, None, None)]
    used = {0: set()}
    for i in range(1, n):
        par = rng.randrange(i)
        w = rand_scalar(rng, field)
        while w in used[par]:
            w = rand_scalar(rng, field)
        used[par].add(w)
        used[i] = set()
        nodes.append((i, par, w))
    rng.shuffle(nodes)
    return FineWeightedTree.from_nodes(nodes, field)


def split_poly(rng, field, deg, exclude=(0,)):
    """Monic polynomial in ``t`` with ``deg`` distinct roots avoiding ``exclude``."""
    return UniPoly.from_roots(distinct_scalars(rng, field, deg, exclude=[field(e) for e in exclude]),
                              field)


def danielewski_Q(rng, field, h, r):
    """``Q`` with ``Q(0, y)`` split with simple roots and random higher terms."""
    roots = distinct_scalars(rng, field, r)
    fiber = Poly.from_uni(UniPoly.from_roots(roots, field), "y")
    x = Poly.var("x", field=field)
    extra = Poly.zero(field=field)
    for _ in range(rng.randint(0, 3)):
        extra = extra + Poly({(rng.randint(0, h + 1), rng.randint(0, r)): rand_scalar(rng, field)},
                             field=field)
    return fiber + x * extra
