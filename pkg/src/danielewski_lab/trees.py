"""Fine weighted rooted trees and the chart data of the surfaces they define.

A tree is given as a list of nodes, each with an optional parent and the
weight of the edge from that parent.  The *fine* condition asks that the
children of any node carry pairwise distinct weights.  Each leaf ``e_i`` at
level ``n_i`` yields the polynomial ``sigma_i(x) = sum_j w_j x^j`` of the weights
read down the path from the root, and the leaves index the affine charts of
the associated surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, NamedTuple

from .algebra.fields import QQ
from .algebra.mpoly import Poly
from .algebra.upoly import LaurentPoly, UniPoly
from .errors import (
    Cycle,
    DuplicateChildWeight,
    EmptyLevel,
    MalformedTree,
    MultipleRoots,
    NotNormalizedComb,
    SeparatednessViolation,
    UnknownParent,
)


@dataclass(frozen=True)
class FineWeightedTree:
    """Immutable, validated rooted tree with field-valued edge weights.

    Build instances with :meth:`from_nodes`; ``children`` lists are sorted by
    weight in field order, which fixes the chart order used everywhere.
    """

    root: Any
    parent: dict
    weight: dict
    children: dict
    field: Any = QQ
    level: dict = dc_field(default_factory=dict)

    @classmethod
    def from_nodes(cls, nodes, field=QQ) -> "FineWeightedTree":
        """``nodes`` is an iterable of ``(id, parent_id_or_None, weight_or_None)``."""
        parent, weight, ids = {}, {}, []
        for node_id, par, w in nodes:
            if node_id in parent or node_id in ids:
                raise MalformedTree(f"duplicate node id {node_id!r}", node=node_id)
            ids.append(node_id)
            if par is not None:
                if w is None:
                    raise MalformedTree(f"edge into {node_id!r} has no weight", node=node_id)
                parent[node_id] = par
                weight[node_id] = field(w)
        roots = [i for i in ids if i not in parent]
        if len(roots) > 1:
            raise MultipleRoots(f"{len(roots)} roots", roots=roots)
        if not ids:
            raise MalformedTree("empty tree")
        if not roots:
            raise Cycle("no root: every node has a parent")
        idset = set(ids)
        for child, par in parent.items():
            if par not in idset:
                raise UnknownParent(f"unknown parent {par!r} of {child!r}", node=child, parent=par)
        children: dict = {i: [] for i in ids}
        for child, par in parent.items():
            children[par].append(child)
        for node, kids in children.items():
            seen = {}
            for k in kids:
                w = weight[k]
                if w in seen:
                    raise DuplicateChildWeight(
                        f"children {seen[w]!r} and {k!r} of {node!r} share weight {w}",
                        node=node, weight=field.encode(w))
                seen[w] = k
            kids.sort(key=lambda k: field.sort_key(weight[k]))
        root = roots[0]
        level = {root: 0}
        stack = [root]
        while stack:
            n = stack.pop()
            for k in children[n]:
                level[k] = level[n] + 1
                stack.append(k)
        if len(level) != len(ids):
            missing = [i for i in ids if i not in level]
            raise Cycle("nodes unreachable from the root lie on a cycle", nodes=missing)
        return cls(root, parent, weight, {k: tuple(v) for k, v in children.items()}, field, level)

    # -- traversal ----------------------------------------------------------

    @property
    def nodes(self) -> list:
        """Node ids in chart (depth-first, weight-sorted) order."""
        out, stack = [], [self.root]
        while stack:
            n = stack.pop()
            out.append(n)
            stack.extend(reversed(self.children[n]))
        return out

    def leaves(self) -> list:
        return [n for n in self.nodes if not self.children[n]]

    def path_weights(self, node) -> list:
        """Edge weights from the root down to ``node``."""
        ws = []
        while node != self.root:
            ws.append(self.weight[node])
            node = self.parent[node]
        return ws[::-1]

    def canonical(self):
        """Hashable form that forgets node ids and child order."""

        def walk(n):
            kids = [(self.field.sort_key(self.weight[k]), walk(k)) for k in self.children[n]]
            return tuple(sorted(kids))

        return walk(self.root)

    def same_shape(self, other: "FineWeightedTree") -> bool:
        """Equality up to renaming nodes and reordering children."""
        return self.field == other.field and self.canonical() == other.canonical()

    def to_nodes(self) -> list:
        return [(n, self.parent.get(n), self.weight.get(n)) for n in self.nodes]


class ShapeReport(NamedTuple):
    is_chain: bool
    is_comb: bool
    is_rake: bool
    is_special: bool
    height: int
    leaf_levels: list
    level1_count: int


def validate_tree(t: FineWeightedTree) -> ShapeReport:
    """Classify the shape of a validated tree.

    A *comb* has at most one non-leaf child below each node; a *rake* has all
    leaves on one level ``h >= 1`` and contains a node whose removal leaves a
    disjoint union of chains.  A one-node tree is a chain and a comb, and its
    single leaf (the root) sits at level 0.
    """
    kids = t.children
    leaf_levels = [t.level[n] for n in t.leaves()]
    is_chain = all(len(k) <= 1 for k in kids.values())
    is_comb = all(sum(1 for c in k if kids[c]) <= 1 for k in kids.values())
    is_special = len(set(leaf_levels)) == 1
    height = max(leaf_levels)
    is_rake = False
    if is_special and height >= 1:
        for stem in t.nodes:
            if all(sum(1 for c in k if c != stem) <= 1
                   for n, k in kids.items() if n != stem):
                is_rake = True
                break
    return ShapeReport(is_chain, is_comb, is_rake, is_special, height, leaf_levels,
                       len(kids[t.root]))


class LeafPolynomial(NamedTuple):
    leaf: Any
    level: int
    sigma: UniPoly


def sigma_from_tree(t: FineWeightedTree) -> list:
    """``(leaf, n_i, sigma_i)`` for every leaf, in chart order."""
    return [LeafPolynomial(leaf, t.level[leaf], UniPoly(t.path_weights(leaf), t.field))
            for leaf in t.leaves()]


@dataclass(frozen=True)
class TransitionAtlas:
    """Gluing data ``u_i = x^(n_j - n_i) u_j + g_ij`` between leaf charts."""

    r: int
    degrees: list
    sigma: list
    pairs: dict
    psi: list

    def cocycle_residuals(self) -> dict:
        """``g_ik - g_ij - x^(n_j-n_i) g_jk`` for every chart triple."""
        out = {}
        n = self.degrees
        for i in range(self.r):
            for j in range(self.r):
                for k in range(self.r):
                    gij, gjk, gik = (self._g(i, j), self._g(j, k), self._g(i, k))
                    out[(i, j, k)] = gik - gij - gjk.times_x_power(n[j] - n[i])
        return out

    def _g(self, i, j) -> LaurentPoly:
        if i == j:
            return LaurentPoly(0, UniPoly.zero(self.sigma[0].field))
        return self.pairs[(i, j)][1]


def transition_atlas(t: FineWeightedTree) -> TransitionAtlas:
    """Transition pairs ``(f_ij, g_ij)`` and canonical functions ``psi_i``.

    Verifies the twisted cocycle relation on every triple and that each
    ``g_ij`` (``i != j``) has a pole at ``x = 0``.
    """
    leaves = sigma_from_tree(t)
    field = t.field
    r = len(leaves)
    n = [lp.level for lp in leaves]
    sig = [lp.sigma for lp in leaves]
    one = UniPoly.one(field)
    pairs = {}
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            f = LaurentPoly(n[j] - n[i], one)
            g = LaurentPoly(-n[i], sig[j] - sig[i])
            if g.is_regular():
                raise SeparatednessViolation(
                    f"g_{i + 1}{j + 1} = {g} extends over x = 0", i=i + 1, j=j + 1)
            pairs[(i, j)] = (f, g)
    gens = ("x", "u")
    psi = [Poly.var("x", gens, field, power=n[i]) * Poly.var("u", gens, field)
           + Poly.from_uni(sig[i], "x", gens) for i in range(r)]
    atlas = TransitionAtlas(r, n, sig, pairs, psi)
    for key, res in atlas.cocycle_residuals().items():
        if not res.is_zero():
            raise SeparatednessViolation(f"cocycle fails on {key}: {res}", triple=key)
    return atlas


def comb_from_tree(t: FineWeightedTree, permissive: bool = False) -> tuple:
    """Read ``(h, [P_0, ..., P_{h-1}])`` off a normalized comb.

    The comb must have zero weights along its spine of non-leaf nodes and a
    zero-weight leaf below the last spine node.  ``P_l`` is the monic product
    of ``t - w`` over the leaves hanging at level ``l + 1`` below spine node
    ``l``.  A level without such leaves gives ``P_l = 1``, which is rejected
    unless ``permissive`` is set.
    """
    shape = validate_tree(t)
    if not shape.is_comb:
        raise NotNormalizedComb("tree is not a comb")
    field = t.field
    spine = [t.root]
    while True:
        inner = [c for c in t.children[spine[-1]] if t.children[c]]
        if not inner:
            break
        spine.append(inner[0])
    h = len(spine)
    if not t.children[spine[-1]]:
        raise NotNormalizedComb("a one-node tree has no comb embedding")
    for node in spine[1:]:
        if t.weight[node]:
            raise NotNormalizedComb(f"spine edge into {node!r} has nonzero weight",
                                    node=node)
    zero_leaves = [c for c in t.children[spine[-1]] if not t.weight[c]]
    if not zero_leaves:
        raise NotNormalizedComb("the last spine node has no zero-weight leaf")
    P_list, warnings = [], []
    for lvl, node in enumerate(spine):
        roots = [t.weight[c] for c in t.children[node]
                 if not t.children[c] and t.weight[c]]
        if not roots:
            if not permissive:
                raise EmptyLevel(f"no leaves at level {lvl + 1}", level=lvl)
            warnings.append(f"EmptyLevel: P_{lvl} = 1")
        P_list.append(UniPoly.from_roots(roots, field))
    return h, P_list, warnings
