"""The free unitary tree algebras on labeled leaves.

Elements are :class:`~treehopf.linear.LinComb` values over reduced planar
trees with labeled leaves; the empty tree is the unit 1.  The binary algebra
uses ``dot`` and stays on binary trees; the algebra with one generating
operation per arity uses ``vee``.  Unit normalization is eager: no basis
tree ever contains the empty tree, and any unit argument of ``vee`` is
deleted with the arity dropping accordingly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .linear import LinComb
from .trees import (EMPTY, PlanarTree, enumerate_trees, leaf,
                    leaf_restrict, node, reduced, relabel)


def vee_monomials(ts) -> PlanarTree:
    """Grafting on monomials with unit normalization."""
    kept = tuple(t for t in ts if not t.is_empty)
    if not kept:
        return EMPTY
    if len(kept) == 1:
        return kept[0]
    return node(kept)


def vee(*args: LinComb) -> LinComb:
    """Multilinear grafting of polynomials."""
    out = LinComb()
    acc = out.terms
    for combo in itertools.product(*(a.sorted_items() for a in args)):
        c = Fraction(1)
        for _, ci in combo:
            c *= ci
        b = vee_monomials(tuple(t for t, _ in combo))
        v = acc.get(b, Fraction(0)) + c
        if v:
            acc[b] = v
        else:
            acc.pop(b, None)
    return out


def dot(f: LinComb, g: LinComb) -> LinComb:
    """The binary product; closes on binary trees."""
    return vee(f, g)


def unit() -> LinComb:
    return LinComb.of(EMPTY)


def var(k: int) -> LinComb:
    return LinComb.of(leaf(k))


def commutator(f: LinComb, g: LinComb) -> LinComb:
    return dot(f, g) - dot(g, f)


def associator(f: LinComb, g: LinComb, h: LinComb) -> LinComb:
    """(f,g,h) with the binary product: (fg)h - f(gh)."""
    return dot(dot(f, g), h) - dot(f, dot(g, h))


def ternary_associator(f: LinComb, g: LinComb, h: LinComb) -> LinComb:
    """(fg)h minus the single 3-corolla on f, g, h."""
    return dot(dot(f, g), h) - vee(f, g, h)


# -- derivations --------------------------------------------------------------

@lru_cache(maxsize=None)
def _partial_k_monomial(k: int, t: PlanarTree):
    if t.is_empty:
        return ()
    out = {}
    for pos, lab in enumerate(t.labels(), start=1):
        if lab == k:
            comp = set(range(1, t.leaf_count + 1)) - {pos}
            r = reduced(leaf_restrict(t, comp))
            out[r] = out.get(r, 0) + 1
    return tuple(out.items())


def partial_k(k: int, f: LinComb) -> LinComb:
    """Derivation sending x_k to 1 and the other variables to 0."""
    return f.map_basis(lambda t: LinComb(_partial_k_monomial(k, t)))


def partial_kj(k: int, j: int, f: LinComb) -> LinComb:
    """Derivation sending x_k to x_j and the other variables to 0."""

    def on_monomial(t: PlanarTree) -> LinComb:
        if t.is_empty:
            return LinComb()
        labs = t.labels()
        out = LinComb()
        for pos, lab in enumerate(labs):
            if lab == k:
                out = out + LinComb.of(
                    relabel(t, labs[:pos] + (j,) + labs[pos + 1:]))
        return out

    return f.map_basis(on_monomial)


@lru_cache(maxsize=None)
def _restriction_table(t: PlanarTree):
    """All (red(t|I), red(t|I^c)) pairs over leaf subsets I, with counts."""
    n = t.leaf_count
    out = {}
    positions = range(1, n + 1)
    for r in range(n + 1):
        for keep in itertools.combinations(positions, r):
            keepset = set(keep)
            comp = set(positions) - keepset
            pair = (reduced(leaf_restrict(t, keepset)),
                    reduced(leaf_restrict(t, comp)))
            out[pair] = out.get(pair, 0) + 1
    return out


def partial_tree(s, f: LinComb) -> LinComb:
    """Generalized differential operator indexed by a monomial or a
    homogeneous polynomial s; the empty tree gives the identity."""
    s = s if isinstance(s, LinComb) else LinComb.of(s)
    out = LinComb()
    for smono, sc in s.items():
        for t, c in f.items():
            if t.is_empty:
                if smono.is_empty:
                    out = out + LinComb.of(EMPTY, sc * c)
                continue
            for (left, right), mult in _restriction_table(t).items():
                if left is smono:
                    out = out + LinComb.of(right, sc * c * mult)
    return out


def mu_count(s: PlanarTree, t: PlanarTree) -> int:
    """Number of leaf subsets of t whose reduced restriction equals s."""
    if s.is_empty:
        return 1 if not t.is_empty else 1
    total = 0
    for (left, _), mult in _restriction_table(t).items():
        if left is s:
            total += mult
    return total


# -- Taylor expansion ---------------------------------------------------------

def right_mult(f: LinComb, k: int) -> LinComb:
    return dot(f, var(k))


def attach_powers(f: LinComb, exponents) -> LinComb:
    """Iterated binary right multiplications [f] x1^j1 ... xm^jm, x_m outermost."""
    out = f
    for k, j in enumerate(exponents, start=1):
        for _ in range(j):
            out = right_mult(out, k)
    return out


class TaylorExpansion:
    """Finite expansion of a polynomial into constant coefficients against
    iterated right multiplications by the variables."""

    def __init__(self, nvars: int, coefficients: dict):
        self.nvars = nvars
        self.coefficients = {j: c for j, c in coefficients.items() if not c.is_zero()}

    def coefficient(self, exponents) -> LinComb:
        return self.coefficients.get(tuple(exponents), LinComb())

    def constant_term(self) -> LinComb:
        return self.coefficient((0,) * self.nvars)

    def reconstruct(self) -> LinComb:
        out = LinComb()
        for j, c in self.coefficients.items():
            out = out + attach_powers(c, j)
        return out

    def __repr__(self):
        parts = ["%s: %r" % (j, c) for j, c in sorted(self.coefficients.items())]
        return "TaylorExpansion{" + ", ".join(parts) + "}"


def _expand_one_var(f: LinComb, k: int):
    """Coefficients a_j with f = sum_j [a_j] x_k^j and all a_j killed by
    the k-th derivation; highest power extracted first."""
    coeffs = {}
    rest = f
    while True:
        n = 0
        d = rest
        powers = [d]
        while True:
            d = partial_k(k, d)
            if d.is_zero():
                break
            powers.append(d)
            n += 1
        if n == 0:
            if not rest.is_zero():
                coeffs[0] = coeffs.get(0, LinComb()) + rest
            break
        fact = 1
        for i in range(2, n + 1):
            fact *= i
        a_n = powers[n] / fact
        coeffs[n] = coeffs.get(n, LinComb()) + a_n
        attached = a_n
        for _ in range(n):
            attached = right_mult(attached, k)
        rest = rest - attached
    return coeffs


def taylor_expand(f: LinComb, nvars: int) -> TaylorExpansion:
    """Unique expansion of f (in x_1..x_nvars) with constant coefficients."""
    partial = {(): f}
    for k in range(nvars, 0, -1):
        nxt = {}
        for suffix, g in partial.items():
            for j, a in _expand_one_var(g, k).items():
                key = (j,) + suffix
                nxt[key] = nxt.get(key, LinComb()) + a
        partial = nxt
    return TaylorExpansion(nvars, partial)


def constants_projection(f: LinComb, nvars: int) -> LinComb:
    """Projector onto the subalgebra killed by every derivation."""
    return taylor_expand(f, nvars).constant_term()


# -- component bases and constants --------------------------------------------

def monomial_basis(degree: int, labels, binary: bool):
    """Canonically ordered basis monomials of one multihomogeneous component;
    ``labels`` is the leaf-label multiset."""
    labels = tuple(sorted(labels))
    if len(labels) != degree:
        raise ValueError("label multiset size must equal the degree")
    shapes = enumerate_trees(degree, binary=binary)
    arrangements = sorted(set(itertools.permutations(labels)))
    out = [relabel(s, arr) for s in shapes for arr in arrangements]
    out.sort(key=PlanarTree.sort_key)
    return out


def one_var_basis(degree: int, binary: bool = True, variable: int = 1):
    return monomial_basis(degree, [variable] * degree, binary)


def multilinear_basis(n: int, binary: bool = True):
    return monomial_basis(n, range(1, n + 1), binary)


def constants_basis(operad: str, degree: int = None, multidegree=None):
    """Exact basis of the constants in one graded component ('mag' or 'magw'),
    via the kernel of the stacked derivations."""
    from .linear import kernel_basis, matrix_from_columns

    binary = operad == "mag"
    if multidegree is not None:
        labels = [k for k, d in enumerate(multidegree, start=1) for _ in range(d)]
        nvars = len(multidegree)
    else:
        labels = [1] * degree
        nvars = 1
    basis = monomial_basis(len(labels), labels, binary)
    images = []
    for t in basis:
        img = LinComb()
        for k in range(1, nvars + 1):
            img = img + LinComb(((k, s), c) for s, c in
                                _partial_k_monomial(k, t))
        images.append(img)
    coords = {}
    for img in images:
        for b in img.support():
            coords.setdefault(b, len(coords))
    if not coords:
        return [LinComb.of(t) for t in basis]
    m = matrix_from_columns(images, coords)
    out = []
    for vec in kernel_basis(m):
        out.append(LinComb((basis[i], c) for i, c in enumerate(vec)))
    return out
