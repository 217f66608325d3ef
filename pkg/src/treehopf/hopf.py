"""Co-addition on the free tree algebras, its dual shuffle product, the
co-magma map, recursive antipodes, and generic coproduct checkers.

The co-addition sends every variable to x (x) 1 + 1 (x) x and extends as an
algebra morphism; on a monomial it sums the reduced restrictions to all leaf
subsets against their complements.  Coproduct dispatch covers the four
structures in this package: ``coadd`` (trees, unit 1), ``lr`` and ``bf``
(binary trees, unit the leaf), ``ck`` (forests, unit the empty forest).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import dendriform, magma
from .linear import LinComb, UnitTermError, apply_leg, swap_tensor, tensor
from .trees import (EMPTY, Forest, PlanarTree, enumerate_forests,
                    enumerate_shuffles, enumerate_trees, leaf_restrict,
                    mirror, reduced, relabel)

COPRODUCT_KINDS = ("coadd", "lr", "ck", "bf")


@lru_cache(maxsize=None)
def _coadd_mono(t: PlanarTree) -> LinComb:
    if t.is_empty:
        return LinComb.of((EMPTY, EMPTY))
    out = {}
    n = t.leaf_count
    for r in range(n + 1):
        for keep in itertools.combinations(range(1, n + 1), r):
            keepset = set(keep)
            comp = set(range(1, n + 1)) - keepset
            key = (reduced(leaf_restrict(t, keepset)),
                   reduced(leaf_restrict(t, comp)))
            out[key] = out.get(key, 0) + 1
    return LinComb(out)


def coadd(f: LinComb) -> LinComb:
    """Co-addition; cocommutative, an algebra morphism for every grafting."""
    return f.map_basis(_coadd_mono)


def coproduct(kind: str, f: LinComb) -> LinComb:
    if kind == "coadd":
        return coadd(f)
    if kind == "lr":
        return dendriform.delta_lr(f)
    if kind == "ck":
        return dendriform.delta_ck(f)
    if kind == "bf":
        return dendriform.delta_bf(f)
    raise ValueError("unknown coproduct kind %r" % kind)


def coproduct_unit(kind: str):
    if kind == "coadd":
        return EMPTY
    if kind == "ck":
        return Forest(())
    return dendriform.YLEAF


def reduced_coproduct(kind: str, f: LinComb) -> LinComb:
    """The coproduct minus the two trivial terms; f may not contain the unit."""
    unit = coproduct_unit(kind)
    if f.coeff(unit):
        raise UnitTermError("reduced coproduct needs a zero unit coefficient")
    d = coproduct(kind, f)
    one = LinComb.of(unit)
    return d - tensor(f, one) - tensor(one, f)


def is_primitive(kind: str, f: LinComb) -> bool:
    """Whether the reduced coproduct vanishes.

    For the co-addition on homogeneous input this tests the generalized
    differentials only up to half the degree, which suffices by
    cocommutativity; other kinds check the full reduced coproduct.
    """
    if f.is_zero():
        return True
    if kind == "coadd":
        degs = {t.leaf_count for t in f.support()}
        if len(degs) == 1:
            return _is_primitive_coadd_homogeneous(f, degs.pop())
    return reduced_coproduct(kind, f).is_zero()


def _is_primitive_coadd_homogeneous(f: LinComb, n: int) -> bool:
    # differentials up to half the degree suffice by cocommutativity
    if n == 0:
        return False
    variables = sorted({v for t in f.support() for v in t.labels()})
    k = 1
    while k < (n + 1) / 2:
        for shape in enumerate_trees(k):
            for labs in itertools.product(variables, repeat=k):
                s = relabel(shape, labs)
                if not magma.partial_tree(s, f).is_zero():
                    return False
        k += 1
    return True


# -- dual shuffle multiplication ----------------------------------------------

def shuffle(f: LinComb, g: LinComb, binary: bool = False) -> LinComb:
    """Dual of the co-addition: commutative, associative, unit 1.

    With ``binary`` the result is projected onto binary trees, which is the
    shuffle of the binary-tree algebra.
    """
    out = LinComb()
    for a, ca in f.items():
        for b, cb in g.items():
            c = ca * cb
            if a.is_empty:
                out = out + LinComb.of(b, c)
            elif b.is_empty:
                out = out + LinComb.of(a, c)
            else:
                out = out + LinComb((t, c * m) for t, m in enumerate_shuffles(a, b))
    if binary:
        out = LinComb((t, c) for t, c in out.items() if t.is_binary)
    return out


def nabla2(f: LinComb) -> LinComb:
    """Dual of the binary grafting: the co-magma map on the shuffle algebra."""

    def on_mono(t: PlanarTree) -> LinComb:
        if t.is_empty:
            return LinComb.of((EMPTY, EMPTY))
        out = LinComb.of((t, EMPTY)) + LinComb.of((EMPTY, t))
        if t.is_node and len(t.children) == 2:
            out = out + LinComb.of((t.children[0], t.children[1]))
        return out

    return f.map_basis(on_mono)


# -- antipodes ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _antipode_left_mono(t: PlanarTree) -> LinComb:
    out = -1 * LinComb.of(t)
    red = _coadd_mono(t) - LinComb.of((t, EMPTY)) - LinComb.of((EMPTY, t))
    for (a, b), c in red.items():
        out = out - c * magma.dot(_antipode_left_mono(a), LinComb.of(b))
    return out


@lru_cache(maxsize=None)
def _antipode_right_mono(t: PlanarTree) -> LinComb:
    out = -1 * LinComb.of(t)
    red = _coadd_mono(t) - LinComb.of((t, EMPTY)) - LinComb.of((EMPTY, t))
    for (a, b), c in red.items():
        out = out - c * magma.dot(LinComb.of(a), _antipode_right_mono(b))
    return out


def antipode_left(f: LinComb) -> LinComb:
    """Left antipode for the co-addition, with the binary product in the recursion."""
    if f.coeff(EMPTY):
        raise UnitTermError("antipode needs a zero unit coefficient")
    return f.map_basis(_antipode_left_mono)


def antipode_right(f: LinComb) -> LinComb:
    if f.coeff(EMPTY):
        raise UnitTermError("antipode needs a zero unit coefficient")
    return f.map_basis(_antipode_right_mono)


def antipode_right_by_mirror(f: LinComb) -> LinComb:
    """The right antipode as the mirror conjugate of the left one."""
    m = f.map_basis(mirror)
    return antipode_left(m).map_basis(mirror)


# -- checkers -------------------------------------------------------------------

def basis_elements(kind: str, degree: int):
    """Canonical basis of one graded component of the algebra carrying the
    coproduct; degree counts leaves (coadd, anonymous labels), internal
    vertices (lr/bf) or total vertices (ck)."""
    if kind == "coadd":
        return [LinComb.of(t) for t in enumerate_trees(degree)]
    if kind in ("lr", "bf"):
        if degree == 0:
            return [LinComb.of(dendriform.YLEAF)]
        return [LinComb.of(t) for t in enumerate_trees(degree + 1, binary=True)]
    if kind == "ck":
        return [LinComb.of(f) for f in enumerate_forests(degree)]
    raise ValueError("unknown coproduct kind %r" % kind)


def check_coassociative(kind: str, max_degree: int):
    """Verify (Delta (x) id) Delta = (id (x) Delta) Delta on every basis
    element up to the cap; returns (ok, first failure or None)."""
    lo = 1 if kind == "coadd" else 0
    for n in range(lo, max_degree + 1):
        for b in basis_elements(kind, n):
            d = coproduct(kind, b)
            lhs = apply_leg(d, 0, lambda x: coproduct(kind, LinComb.of(x)))
            rhs = apply_leg(d, 1, lambda x: coproduct(kind, LinComb.of(x)))
            if lhs != rhs:
                return False, b
    return True, None


def check_cocommutative_coadd(max_degree: int) -> bool:
    for n in range(1, max_degree + 1):
        for b in basis_elements("coadd", n):
            d = coadd(b)
            if swap_tensor(d) != d:
                return False
    return True
