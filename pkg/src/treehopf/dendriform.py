"""The one-generator dendriform algebra on planar binary trees, the grafting
operations under/over/first-leaf, and three Hopf coproducts on tree bases.

Planar binary trees here are unlabeled; the single leaf is the unit of the
associative product ``star`` and has degree 0 (degree counts internal
vertices).  The planar-forest Hopf algebra uses all planar trees graded by
the total vertex count, with the empty forest as unit.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .linear import LinComb, apply_leg, tensor
from .trees import (ANON, Forest, NotBinaryError, PlanarTree,
                    admissible_cuts, comb_graft, graft, leaf, node,
                    right_comb_presentation, substitute_at_leaf)

YLEAF = leaf(ANON)
Y = node((YLEAF, YLEAF))


class UnitUnitError(ValueError):
    pass


def ydegree(t: PlanarTree) -> int:
    """Internal-vertex count of a binary tree."""
    return (t.vertex_count - 1) // 2


def _check_binary(t: PlanarTree):
    if t.is_empty or not t.is_binary:
        raise NotBinaryError("expected a non-empty planar binary tree: %r" % (t,))


# -- dendriform operations ----------------------------------------------------

def _bilinear(f: LinComb, g: LinComb, on_monomials) -> LinComb:
    out = LinComb()
    acc = out.terms
    for a, ca in f.items():
        for b, cb in g.items():
            img = on_monomials(a, b)
            c = ca * cb
            for t, ct in (img.items() if isinstance(img, LinComb) else ((img, 1),)):
                v = acc.get(t, Fraction(0)) + c * ct
                if v:
                    acc[t] = v
                else:
                    acc.pop(t, None)
    return out


def _prec_mono(t: PlanarTree, z: PlanarTree) -> LinComb:
    if t is YLEAF and z is YLEAF:
        raise UnitUnitError("x < y is undefined on two units")
    if z is YLEAF:
        return LinComb.of(t)
    if t is YLEAF:
        return LinComb()
    l, r = t.children
    return apply_vee_left(_star_mono(r, z), l)


def _succ_mono(t: PlanarTree, z: PlanarTree) -> LinComb:
    if t is YLEAF and z is YLEAF:
        raise UnitUnitError("x > y is undefined on two units")
    if t is YLEAF:
        return LinComb.of(z)
    if z is YLEAF:
        return LinComb()
    l, r = z.children
    return apply_vee_right(_star_mono(t, l), r)


def apply_vee_left(p: LinComb, left: PlanarTree) -> LinComb:
    return p.map_basis(lambda t: node((left, t)))


def apply_vee_right(p: LinComb, right: PlanarTree) -> LinComb:
    return p.map_basis(lambda t: node((t, right)))


@lru_cache(maxsize=None)
def _star_mono(t: PlanarTree, z: PlanarTree) -> LinComb:
    if t is YLEAF:
        return LinComb.of(z)
    if z is YLEAF:
        return LinComb.of(t)
    return _prec_mono(t, z) + _succ_mono(t, z)


def prec(f: LinComb, g: LinComb) -> LinComb:
    return _bilinear(f, g, _prec_mono)


def succ(f: LinComb, g: LinComb) -> LinComb:
    return _bilinear(f, g, _succ_mono)


def star(f: LinComb, g: LinComb) -> LinComb:
    """The associative sum of the two dendriform halves; unit is the leaf."""
    return _bilinear(f, g, _star_mono)


# -- grafting products ---------------------------------------------------------

def under(t: PlanarTree, s: PlanarTree) -> PlanarTree:
    """Graft s at the last leaf of t."""
    if t is YLEAF:
        return s
    return substitute_at_leaf(t, t.leaf_count, s)


def circ_alpha(t: PlanarTree, s: PlanarTree) -> PlanarTree:
    """Graft s at the first leaf of t."""
    if t is YLEAF:
        return s
    return substitute_at_leaf(t, 1, s)


def over(s: PlanarTree, t: PlanarTree) -> PlanarTree:
    """Opposite of circ_alpha."""
    return circ_alpha(t, s)


def circ_alpha_poly(f: LinComb, g: LinComb) -> LinComb:
    return _bilinear(f, g, lambda a, b: LinComb.of(circ_alpha(a, b)))


def vee_leaf(t: PlanarTree) -> PlanarTree:
    """New root with an extra leaf on the left."""
    return node((YLEAF, t))


def vee_leaf_poly(f: LinComb) -> LinComb:
    return f.map_basis(vee_leaf)


def comb_graft_poly(polys) -> LinComb:
    """Multilinear extension of the right-comb grafting."""
    polys = list(polys)
    if not polys:
        return LinComb.of(YLEAF)
    out = LinComb()
    for combo in itertools.product(*(p.sorted_items() for p in polys)):
        c = Fraction(1)
        for _, ci in combo:
            c *= ci
        out = out + LinComb.of(comb_graft(tuple(t for t, _ in combo)), c)
    return out


def corrected_comb(polys) -> LinComb:
    """Comb grafting minus recursive lower-comb corrections.

    The corrections fold the tail into one factor and re-apply the operator,
    not the bare comb grafting; only this reading makes the coproduct of the
    result split into star products of first legs against corrected combs of
    second legs, which the dendriform image of the first-leaf coalgebra needs.
    """
    polys = list(polys)
    n = len(polys)
    if n == 0:
        raise ValueError("corrected_comb needs at least one argument")
    if n == 1:
        return comb_graft_poly(polys)
    out = comb_graft_poly(polys)
    for j in range(1, n):
        merged = star(polys[j - 1], comb_graft_poly(polys[j:]))
        out = out - corrected_comb(polys[:j - 1] + [merged])
    return out


# -- coproducts ----------------------------------------------------------------

def _tensor_mul(a: LinComb, b: LinComb, leg_mul) -> LinComb:
    """Componentwise product of 2-tensors (middle interchange)."""
    out = LinComb()
    for (a1, a2), ca in a.items():
        for (b1, b2), cb in b.items():
            piece = tensor(leg_mul(a1, b1), leg_mul(a2, b2))
            out = out + ca * cb * piece
    return out


def delta_lr(f: LinComb) -> LinComb:
    """Coproduct of the free dendriform algebra on one generator."""
    return f.map_basis(_delta_lr_cached)


@lru_cache(maxsize=None)
def _delta_lr_cached(t: PlanarTree) -> LinComb:
    _check_binary(t)
    if t is YLEAF:
        return LinComb.of((YLEAF, YLEAF))
    l, r = t.children
    out = LinComb.of((t, YLEAF))
    dl, dr = _delta_lr_cached(l), _delta_lr_cached(r)
    for (l1, l2), cl in dl.items():
        for (r1, r2), cr in dr.items():
            first = _star_mono(l1, r1)
            second = node((l2, r2))
            for a, ca in first.items():
                out = out + LinComb.of((a, second), cl * cr * ca)
    return out


def delta_ck(f: LinComb) -> LinComb:
    """Coproduct of the planar-forest Hopf algebra; multiplicative over
    concatenation, admissible-cut sum on trees.  Both legs are forests."""
    return f.map_basis(_delta_ck_forest)


@lru_cache(maxsize=None)
def _delta_ck_tree(t: PlanarTree) -> LinComb:
    out = LinComb.of((Forest((t,)), Forest(())))
    if t.is_leaf:
        return out + LinComb.of((Forest(()), Forest((t,))))
    factors = [_delta_ck_tree(c) for c in t.children]
    for combo in itertools.product(*(d.items() for d in factors)):
        branches = Forest(())
        trunks = []
        c = Fraction(1)
        for (bf, tf), ci in combo:
            c *= ci
            branches = branches + bf
            trunks.extend(tf.trees)
        out = out + LinComb.of((branches, Forest((graft(trunks),))), c)
    return out


def _delta_ck_forest(fo: Forest) -> LinComb:
    out = LinComb.of((Forest(()), Forest(())))
    for t in fo:
        out = _tensor_mul(out, _delta_ck_tree(t), lambda a, b: LinComb.of(a + b))
    return out


def delta_ck_by_cuts(f: LinComb) -> LinComb:
    """Admissible-cut form of the forest coproduct; must agree with delta_ck."""

    def on_tree(t):
        out = LinComb()
        for branches, trunk in admissible_cuts(t):
            trunk_f = Forest(()) if trunk.is_empty else Forest((trunk,))
            out = out + LinComb.of((branches, trunk_f))
        return out

    def on_forest(fo):
        out = LinComb.of((Forest(()), Forest(())))
        for t in fo:
            out = _tensor_mul(out, on_tree(t), lambda a, b: LinComb.of(a + b))
        return out

    return f.map_basis(on_forest)


def _circ_atoms(a: PlanarTree, b: PlanarTree) -> LinComb:
    return LinComb.of(circ_alpha(a, b))


@lru_cache(maxsize=None)
def _delta_bf_mono(t: PlanarTree) -> LinComb:
    _check_binary(t)
    if t is YLEAF:
        return LinComb.of((YLEAF, YLEAF))
    if t is Y:
        return LinComb.of((Y, YLEAF)) + LinComb.of((YLEAF, Y))
    l, r = t.children
    if l is YLEAF:
        # generator of the first-leaf product: t = vee_leaf(r), r != leaf
        rl, rr = r.children
        inner = _delta_bf_mono(vee_leaf(rr)) - LinComb.of((vee_leaf(rr), YLEAF))
        mixed = _tensor_mul(inner, _delta_bf_mono(rl), _circ_atoms)
        return LinComb.of((t, YLEAF)) + apply_leg(mixed, 1, vee_leaf)
    # general tree: graft the left subtree onto the first leaf of vee_leaf(r)
    return _tensor_mul(_delta_bf_mono(vee_leaf(r)), _delta_bf_mono(l), _circ_atoms)


def delta_bf(f: LinComb) -> LinComb:
    """Renormalization-style coproduct on binary trees, an algebra morphism
    for the first-leaf grafting product."""
    return f.map_basis(_delta_bf_mono)


def delta_bf_comb_form(t: PlanarTree) -> LinComb:
    """Closed form of the coproduct on vee_leaf(t) through the right-comb
    presentation; agrees with the recursive definition."""
    _check_binary(t)
    if t is YLEAF:
        return _delta_bf_mono(Y)
    parts = right_comb_presentation(t)          # t = comb_graft(parts)
    rev = parts[::-1]                           # innermost factor first
    out = LinComb.of((vee_leaf(t), YLEAF))
    deltas = [_delta_bf_mono(p) for p in rev]
    for combo in itertools.product(*(d.items() for d in deltas)):
        c = Fraction(1)
        first = LinComb.of(YLEAF)
        second_parts = []
        for (leg1, leg2), ci in combo:
            c *= ci
            first = circ_alpha_poly(first, LinComb.of(leg1))
            second_parts.append(leg2)
        second = vee_leaf(comb_graft(tuple(reversed(second_parts))))
        out = out + c * tensor(first, LinComb.of(second))
    return out
