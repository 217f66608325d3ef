"""Primitive subspaces of graded components, dimension formulas, the
shuffle-basis complement, the non-associative Jacobi identity, and highest
weight vectors.

A graded component fixes an algebra kind and a degree descriptor and carries
its canonical monomial basis.  Primitive spaces are exact kernels of the
reduced coproduct in coordinates; for the co-addition the kernel rows only
need differentials up to half the degree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import dendriform, hopf, magma
from .linear import (LinComb, coordinates, format_poly, kernel_basis,
                     matrix_from_columns, pairing, rank)
from .trees import (EMPTY, PlanarTree, enumerate_forests, enumerate_trees,
                    leaf, relabel, sequence)

ALGEBRA_KINDS = ("mag", "magw", "lr", "ck", "bf")


@dataclass
class GradedComponent:
    """One graded piece of an algebra with its canonical ordered basis."""

    kind: str
    descriptor: dict
    basis: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self):
        return coordinates(self.basis)

    def element(self, vector) -> LinComb:
        return LinComb(zip(self.basis, vector))

    def coproduct_kind(self) -> str:
        return {"mag": "coadd", "magw": "coadd",
                "lr": "lr", "ck": "ck", "bf": "bf"}[self.kind]


def component(kind: str, degree: int = None, multidegree=None,
              multilinear: int = None) -> GradedComponent:
    """Build a graded component.

    mag / magw: exactly one of ``degree`` (one variable x_1), ``multidegree``
    (counts per variable) or ``multilinear`` (n distinct variables, each once)
    selects the basis.  lr / bf / ck take ``degree`` (internal vertices for
    binary trees, total vertices for forests).
    """
    if kind in ("mag", "magw"):
        binary = kind == "mag"
        if multilinear is not None:
            basis = magma.multilinear_basis(multilinear, binary)
            desc = {"multilinear": multilinear}
        elif multidegree is not None:
            multidegree = tuple(multidegree)
            labels = [k for k, d in enumerate(multidegree, start=1)
                      for _ in range(d)]
            basis = magma.monomial_basis(len(labels), labels, binary)
            desc = {"multidegree": multidegree}
        else:
            basis = magma.one_var_basis(degree, binary)
            desc = {"degree": degree}
        return GradedComponent(kind, desc, basis)
    if kind in ("lr", "bf"):
        basis = ([dendriform.YLEAF] if degree == 0
                 else enumerate_trees(degree + 1, binary=True))
        return GradedComponent(kind, {"degree": degree}, list(basis))
    if kind == "ck":
        return GradedComponent(kind, {"degree": degree},
                               list(enumerate_forests(degree)))
    raise ValueError("unknown algebra kind %r" % kind)


def _component_degree(comp: GradedComponent) -> int:
    d = comp.descriptor
    if "degree" in d:
        return d["degree"]
    if "multilinear" in d:
        return d["multilinear"]
    return sum(d["multidegree"])


def reduced_coproduct_rows(comp: GradedComponent, half_degree: bool = None):
    """Coordinate images of the reduced coproduct on the component basis.

    With ``half_degree`` (default for the co-addition) only tensor terms whose
    first leg has degree below half the component degree are kept, which cuts
    the kernel computation down without changing it.
    """
    kind = comp.coproduct_kind()
    if half_degree is None:
        half_degree = kind == "coadd"
    n = _component_degree(comp)
    images = []
    for b in comp.basis:
        red = hopf.reduced_coproduct(kind, LinComb.of(b))
        if half_degree and kind == "coadd":
            red = LinComb(((a, s), c) for (a, s), c in red.items()
                          if a.leaf_count < (n + 1) / 2)
        images.append(red)
    return images


def _kernel_of_images(basis, images):
    coords = {}
    for img in images:
        for b in img.support():
            coords.setdefault(b, len(coords))
    if not coords:
        return [LinComb.of(b) for b in basis]
    m = matrix_from_columns(images, coords)
    return [LinComb(zip(basis, vec)) for vec in kernel_basis(m)]


def prim_basis(comp: GradedComponent, half_degree: bool = None):
    """Exact basis of the primitive part of the component, deterministic."""
    return _kernel_of_images(comp.basis, reduced_coproduct_rows(comp, half_degree))


def prim_rank(comp: GradedComponent, half_degree: bool = None) -> int:
    """Dimension of the primitive part via the rank of the coproduct matrix."""
    images = reduced_coproduct_rows(comp, half_degree)
    coords = {}
    for img in images:
        for b in img.support():
            coords.setdefault(b, len(coords))
    if not coords:
        return comp.dim
    m = matrix_from_columns(images, coords)
    return comp.dim - rank(m)


def prim_dim_formula(operad: str, n: int) -> int:
    """(n-1)! times the logarithmic-derivation sequence value."""
    kind = "log-catalan" if operad == "mag" else "log-super-catalan"
    return math.factorial(n - 1) * sequence(kind, n)[n - 1]


def prim_dim(operad: str, n: int, compute: bool = True) -> dict:
    """Multilinear primitive dimension, from the formula and (optionally) the
    exact kernel; reports whether the two agree."""
    formula = prim_dim_formula(operad, n)
    report = {"operad": operad, "n": n, "formulaDim": formula}
    if compute:
        comp = component(operad, multilinear=n)
        report["ambientDim"] = comp.dim
        report["primDim"] = prim_rank(comp)
        report["match"] = report["primDim"] == formula
    return report


def component_report(comp: GradedComponent, sample: int = 3) -> dict:
    """JSON-ready summary of one primitive-space computation."""
    basis = prim_basis(comp)
    report = {
        "component": {"kind": comp.kind, **comp.descriptor},
        "ambientDim": comp.dim,
        "primDim": len(basis),
        "basisSample": [format_poly(p) for p in basis[:sample]],
    }
    if comp.kind in ("mag", "magw") and "multilinear" in comp.descriptor:
        f = prim_dim_formula(comp.kind, comp.descriptor["multilinear"])
        report["formulaDim"] = f
        report["match"] = f == report["primDim"]
    return report


# -- named primitive elements ---------------------------------------------------

def _x(k: int) -> LinComb:
    return magma.var(k)


def named_primitives() -> dict:
    """Catalog of explicitly constructed primitive elements in degrees 2..4."""
    x1, x2, x3, x4 = (_x(k) for k in range(1, 5))
    dot = magma.dot
    assoc = magma.associator
    p = (dot(dot(x1, x2), dot(x3, x4)) - dot(dot(dot(x1, x2), x3), x4)
         + dot(assoc(x1, x3, x4), x2) + dot(assoc(x2, x3, x4), x1))
    q = (dot(dot(x1, x2), dot(x3, x4)) - dot(x1, dot(x2, dot(x3, x4)))
         - dot(x3, assoc(x1, x2, x4)) - dot(x4, assoc(x1, x2, x3)))
    return {
        "commutator": magma.commutator(x1, x2),
        "binary_associator": assoc(x1, x2, x3),
        "ternary_associator": magma.ternary_associator(x1, x2, x3),
        "degree4_right": p,
        "degree4_left": q,
    }


def degree4_right_substituted(*polys) -> LinComb:
    """The degree-4 right-expansion primitive with arbitrary arguments."""
    a, b, c, d = polys
    dot = magma.dot
    assoc = magma.associator
    return (dot(dot(a, b), dot(c, d)) - dot(dot(dot(a, b), c), d)
            + dot(assoc(a, c, d), b) + dot(assoc(b, c, d), a))


def jacobi_check() -> dict:
    """The non-associative Jacobi identity and its companions, symbolically."""
    x1, x2, x3 = (_x(k) for k in range(1, 4))
    dot = magma.dot
    comm = magma.commutator
    assoc = magma.associator
    lhs = (comm(comm(x1, x2), x3) + comm(comm(x3, x1), x2)
           + comm(comm(x2, x3), x1))
    rhs = (assoc(x1, x2, x3) - assoc(x2, x1, x3)
           + assoc(x3, x1, x2) - assoc(x1, x3, x2)
           + assoc(x2, x3, x1) - assoc(x3, x2, x1))
    antisym = comm(comm(x2, x1), x3) == -1 * comm(comm(x1, x2), x3)

    def right_normed(a, b, c):
        return comm(comm(a, b), c) - assoc(a, b, c) + assoc(b, a, c)

    a123 = right_normed(x1, x2, x3)
    expected = (dot(x3, dot(x2, x1)) - dot(x3, dot(x1, x2))
                + dot(x1, dot(x2, x3)) - dot(x2, dot(x1, x3)))
    cyclic = (right_normed(x1, x2, x3) + right_normed(x3, x1, x2)
              + right_normed(x2, x3, x1))
    return {
        "jacobi": lhs == rhs,
        "antisymmetry": antisym,
        "right_normed_form": a123 == expected,
        "right_normed_cyclic_sum_zero": cyclic.is_zero(),
    }


# -- the shuffle complement -------------------------------------------------------

def _set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _multisets_with_degree_sum(degrees, target):
    """Nondecreasing index multisets over ``degrees`` with the given total."""
    out = []

    def go(start, remaining, acc):
        if remaining == 0:
            if len(acc) >= 2:
                out.append(tuple(acc))
            return
        for i in range(start, len(degrees)):
            if degrees[i] <= remaining:
                go(i, remaining - degrees[i], acc + [i])

    go(0, target, [])
    return out


def shuffle_monomials_one_var(operad: str, n: int):
    """All >= 2-factor shuffle products of lower-degree one-variable primitives."""
    binary = operad == "mag"
    gens = []
    for k in range(1, n):
        gens.extend(prim_basis(component(operad, degree=k)))
    degrees = [next(iter(g.support())).leaf_count for g in gens]
    out = []
    for combo in _multisets_with_degree_sum(degrees, n):
        prod = LinComb.of(EMPTY)
        for i in combo:
            prod = hopf.shuffle(prod, gens[i], binary=binary)
        out.append(prod)
    return out


def shuffle_monomials_multilinear(operad: str, n: int):
    """Shuffle products of primitives over set partitions of the variables
    into at least two blocks."""
    binary = operad == "mag"
    prim_cache = {}

    def prims_on(variables):
        key = tuple(variables)
        if key not in prim_cache:
            shapes = component(operad, multilinear=len(key)).basis
            if list(key) != list(range(1, len(key) + 1)):
                mapping = {i + 1: v for i, v in enumerate(key)}
                shapes = [relabel(t, [mapping[l] for l in t.labels()])
                          for t in shapes]
            comp = GradedComponent(operad, {"vars": key, "degree": len(key)},
                                   sorted(shapes, key=PlanarTree.sort_key))
            prim_cache[key] = prim_basis(comp)
        return prim_cache[key]

    out = []
    for part in _set_partitions(range(1, n + 1)):
        if len(part) < 2:
            continue
        blocks = [sorted(b) for b in part]
        for picks in itertools.product(*(prims_on(tuple(b)) for b in blocks)):
            prod = LinComb.of(EMPTY)
            for g in picks:
                prod = hopf.shuffle(prod, g, binary=binary)
            out.append(prod)
    return out


def pbw_check(operad: str, n: int, multilinear: bool = False) -> dict:
    """Shuffle monomials of lower-degree primitives are independent, span the
    orthogonal complement of the primitives, and stay orthogonal to them."""
    if multilinear:
        comp = component(operad, multilinear=n)
        monos = shuffle_monomials_multilinear(operad, n)
    else:
        comp = component(operad, degree=n)
        monos = shuffle_monomials_one_var(operad, n)
    prims = prim_basis(comp)
    coords = comp.coords()
    shuffle_rank = rank(matrix_from_columns(monos, coords)) if monos else 0
    total_rank = rank(matrix_from_columns(monos + prims, coords))
    orthogonal = all(pairing(p, m) == 0 for p in prims for m in monos)
    return {
        "operad": operad, "n": n, "multilinear": multilinear,
        "ambientDim": comp.dim,
        "primDim": len(prims),
        "shuffleCount": len(monos),
        "shuffleRank": shuffle_rank,
        "independent": shuffle_rank == len(monos),
        "complement": total_rank == comp.dim
        and shuffle_rank + len(prims) == comp.dim,
        "orthogonal": orthogonal,
        "ok": shuffle_rank == len(monos)
        and shuffle_rank + len(prims) == comp.dim
        and total_rank == comp.dim and orthogonal,
    }


def exp_series_identity(operad: str, cap: int) -> bool:
    """exp of the primitive generating series minus 1 equals the operad
    generating series, coefficientwise up to the cap."""
    f = [Fraction(0)] + [Fraction(prim_dim_formula(operad, k), math.factorial(k))
                         for k in range(1, cap + 1)]
    expo = [Fraction(0)] * (cap + 1)
    expo[0] = Fraction(1)
    power = [Fraction(1)] + [Fraction(0)] * cap
    fact = 1
    for k in range(1, cap + 1):
        nxt = [Fraction(0)] * (cap + 1)
        for i in range(cap + 1):
            if power[i]:
                for j in range(1, cap + 1 - i):
                    if f[j]:
                        nxt[i + j] += power[i] * f[j]
        power = nxt
        fact *= k
        for i in range(cap + 1):
            expo[i] += power[i] / fact
    target = sequence("catalan" if operad == "mag" else "super-catalan", cap)
    return all(expo[k] == target[k - 1] for k in range(1, cap + 1))


# -- highest weight vectors --------------------------------------------------------

def highest_weight_basis(multidegree, constraint: str = "primitive",
                         binary: bool = True):
    """Basis of the multihomogeneous elements killed by every lowering
    substitution, intersected with the primitive or constant subspace."""
    multidegree = tuple(multidegree)
    m = len(multidegree)
    comp = component("mag" if binary else "magw", multidegree=multidegree)
    images = []
    for t in comp.basis:
        img = LinComb()
        b = LinComb.of(t)
        for i in range(2, m + 1):
            for j in range(1, i):
                img = img + LinComb(
                    (("low", i, j, s), c)
                    for s, c in magma.partial_kj(i, j, b).items())
        if constraint == "primitive":
            red = hopf.reduced_coproduct("coadd", b)
            n = sum(multidegree)
            img = img + LinComb((("red", a, s), c)
                                for (a, s), c in red.items()
                                if a.leaf_count < (n + 1) / 2)
        elif constraint == "constant":
            for k in range(1, m + 1):
                img = img + LinComb((("d", k, s), c) for s, c in
                                    magma.partial_k(k, b).items())
        else:
            raise ValueError("constraint must be 'primitive' or 'constant'")
        images.append(img)
    return _kernel_of_images(comp.basis, images)


def in_span(candidate: LinComb, basis_polys, comp: GradedComponent) -> bool:
    """Exact membership of a component element in the span of given elements."""
    coords = comp.coords()
    m = matrix_from_columns(basis_polys, coords)
    rhs = [Fraction(0)] * comp.dim
    for b, c in candidate.items():
        rhs[coords[b]] = c
    from .linear import solve_exact
    return solve_exact(m, rhs) is not None
