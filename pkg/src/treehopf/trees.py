"""Planar rooted trees: structure, grammar, surgery, enumeration, counting.

Trees are immutable and interned (hash-consed), so structurally equal trees
are the same object.  A tree is the empty tree, a labeled leaf, or an
internal vertex with an ordered, non-empty sequence of non-empty subtrees.
Leaves carry an integer label: 0 is the anonymous mark (printed ``o``),
k >= 1 is the variable x_k.  Internal vertices are unlabeled; their arity
carries all the information the algebras in this package distinguish.

The text grammar (whitespace-insensitive between tokens):

    1            empty tree
    o            anonymous leaf        (binary contexts also accept |)
    x<k>         leaf labeled x_k, k >= 1
    (T1 ... Tk)  internal vertex with k >= 1 children
    [T1; ...; Tn] forest, [] the empty forest
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache


class TreeError(ValueError):
    """Base class for structural errors on trees and forests."""


class EmptyTreeError(TreeError):
    pass


class BadPositionError(TreeError):
    pass


class EmptyArgumentError(TreeError):
    pass


class NotReducedError(TreeError):
    pass


class NotBinaryError(TreeError):
    pass


class LabelCountMismatchError(TreeError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__("offset %d: %s" % (offset, message))
        self.message = message
        self.offset = offset


ANON = 0


class PlanarTree:
    """Immutable planar rooted tree.

    Use the factories ``leaf``/``node`` and the constant ``EMPTY``; the
    constructor is internal.  Equality is identity thanks to interning.
    """

    __slots__ = ("children", "var", "leaf_count", "vertex_count", "_key")

    def __init__(self, children, var, leaf_count, vertex_count):
        self.children = children
        self.var = var
        self.leaf_count = leaf_count
        self.vertex_count = vertex_count
        self._key = None

    @property
    def is_empty(self) -> bool:
        return self.children is None and self.var is None

    @property
    def is_leaf(self) -> bool:
        return self.var is not None

    @property
    def is_node(self) -> bool:
        return self.children is not None

    @property
    def arity(self) -> int:
        return len(self.children) if self.children is not None else 0

    @property
    def is_reduced(self) -> bool:
        if self.children is None:
            return True
        return len(self.children) != 1 and all(c.is_reduced for c in self.children)

    @property
    def is_binary(self) -> bool:
        if self.children is None:
            return True
        return len(self.children) == 2 and all(c.is_binary for c in self.children)

    def labels(self) -> tuple:
        """Leaf labels in left-to-right order."""
        if self.is_empty:
            return ()
        if self.is_leaf:
            return (self.var,)
        out = []
        for c in self.children:
            out.extend(c.labels())
        return tuple(out)

    def sort_key(self):
        """Key for the canonical total order on trees."""
        if self._key is None:
            if self.is_empty:
                self._key = (0, 0, -1, 0, ())
            elif self.is_leaf:
                self._key = (1, 1, 0, self.var, ())
            else:
                self._key = (self.leaf_count, self.vertex_count, 1,
                             len(self.children),
                             tuple(c.sort_key() for c in self.children))
        return self._key

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return format_tree(self)


_interned: dict = {}


def _make(key, children, var, leaf_count, vertex_count) -> PlanarTree:
    t = _interned.get(key)
    if t is None:
        # setdefault is atomic, so concurrent constructions agree on one instance
        t = _interned.setdefault(
            key, PlanarTree(children, var, leaf_count, vertex_count))
    return t


EMPTY = _make(("E",), None, None, 0, 0)


def leaf(var: int = ANON) -> PlanarTree:
    if var < 0:
        raise TreeError("leaf label must be >= 0")
    return _make(("L", var), None, var, 1, 1)


def node(children) -> PlanarTree:
    """Internal vertex over an ordered non-empty sequence of non-empty trees."""
    ts = tuple(children)
    if not ts:
        raise TreeError("node needs at least one child; use graft for forests")
    for c in ts:
        if c.is_empty:
            raise EmptyArgumentError("the empty tree cannot be a child")
    lc = sum(c.leaf_count for c in ts)
    vc = 1 + sum(c.vertex_count for c in ts)
    return _make(("N", ts), ts, None, lc, vc)


# -- grammar ---------------------------------------------------------------

def format_tree(t: PlanarTree) -> str:
    if t.is_empty:
        return "1"
    if t.is_leaf:
        return "o" if t.var == ANON else "x%d" % t.var
    return "(" + " ".join(format_tree(c) for c in t.children) + ")"


def format_malcev(t: PlanarTree) -> str:
    """Bracket-free prefix form of a binary tree: each internal vertex prints
    as ``c`` followed by its two subtrees.  Print-only."""
    if t.is_empty or not t.is_binary:
        raise NotBinaryError("the prefix form needs a non-empty binary tree")
    if t.is_leaf:
        return "o" if t.var == ANON else "x%d" % t.var
    return "c" + format_malcev(t.children[0]) + format_malcev(t.children[1])


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, expected: str):
        raise ParseError("expected %s" % expected, self.pos)

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail("'%s'" % ch)
        self.pos += 1

    def tree(self) -> PlanarTree:
        c = self.peek()
        if c == "1":
            self.pos += 1
            return EMPTY
        if c == "o" or c == "|":
            self.pos += 1
            return leaf(ANON)
        if c == "x":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                self.fail("digits after 'x'")
            k = int(self.text[start:self.pos])
            if k < 1:
                raise ParseError("variable index must be >= 1", start)
            return leaf(k)
        if c == "(":
            self.pos += 1
            children = [self.child()]
            while self.peek() != ")":
                children.append(self.child())
            self.pos += 1
            return node(children)
        self.fail("a tree ('1', 'o', 'x<k>' or '(')")

    def child(self) -> PlanarTree:
        if self.peek() == "":
            self.fail("')'")
        t = self.tree()
        if t.is_empty:
            raise ParseError("empty tree not allowed as a child", self.pos - 1)
        return t

    def forest(self):
        self.expect("[")
        trees = []
        if self.peek() != "]":
            trees.append(self.child())
            while self.peek() == ";":
                self.pos += 1
                trees.append(self.child())
        self.expect("]")
        return tuple(trees)

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("end of input")


def parse_tree(text: str) -> PlanarTree:
    sc = _Scanner(text)
    t = sc.tree()
    sc.end()
    return t


# -- forests ---------------------------------------------------------------

class Forest:
    """Ordered sequence of non-empty planar trees; may be empty."""

    __slots__ = ("trees", "_hash")

    def __init__(self, trees=()):
        ts = tuple(trees)
        for t in ts:
            if t.is_empty:
                raise EmptyArgumentError("the empty tree cannot be a forest member")
        self.trees = ts
        self._hash = hash(ts)

    @property
    def degree(self) -> int:
        return sum(t.vertex_count for t in self.trees)

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def __getitem__(self, i):
        return self.trees[i]

    def __add__(self, other: "Forest") -> "Forest":
        return Forest(self.trees + other.trees)

    def __eq__(self, other):
        return isinstance(other, Forest) and self.trees == other.trees

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.degree, len(self.trees), tuple(t.sort_key() for t in self.trees))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return format_forest(self)


def format_forest(f: Forest) -> str:
    return "[" + "; ".join(format_tree(t) for t in f) + "]"


def parse_forest(text: str) -> Forest:
    sc = _Scanner(text)
    ts = sc.forest()
    sc.end()
    return Forest(ts)


# -- structural operations -------------------------------------------------

def graft(forest) -> PlanarTree:
    """Join a forest under a new root; the empty forest gives the single vertex."""
    ts = tuple(forest)
    if not ts:
        return leaf(ANON)
    return node(ts)


def degraft(t: PlanarTree) -> Forest:
    """Drop the root; inverse of graft on non-empty trees."""
    if t.is_empty:
        raise EmptyTreeError("cannot degraft the empty tree")
    if t.is_leaf:
        return Forest(())
    return Forest(t.children)


def substitute_at_leaf(t1: PlanarTree, position: int, t2: PlanarTree) -> PlanarTree:
    """Replace the leaf at the given left-to-right position (1-based) by t2."""
    if t2.is_empty:
        raise EmptyArgumentError("cannot substitute the empty tree at a leaf")
    if t1.is_empty or not 1 <= position <= t1.leaf_count:
        raise BadPositionError("no leaf at position %d" % position)

    def go(t, pos):
        if t.is_leaf:
            return t2 if pos == 1 else t
        out = []
        for c in t.children:
            if 1 <= pos <= c.leaf_count:
                out.append(go(c, pos))
            else:
                out.append(c)
            pos -= c.leaf_count
        return node(out)

    return go(t1, position)


def mirror(t: PlanarTree) -> PlanarTree:
    """Reverse the order of children, recursively."""
    if t.is_node:
        return node(tuple(mirror(c) for c in reversed(t.children)))
    return t


def reduced(t: PlanarTree) -> PlanarTree:
    """Remove all arity-1 vertices; idempotent, preserves leaves and their order."""
    if t.is_node:
        if len(t.children) == 1:
            return reduced(t.children[0])
        return node(tuple(reduced(c) for c in t.children))
    return t


def sorted_children(t: PlanarTree) -> PlanarTree:
    """Recursively sort children into canonical order: a representative of
    the underlying unordered tree, equal for trees differing only in planar
    structure."""
    if t.is_node:
        kids = sorted((sorted_children(c) for c in t.children),
                      key=PlanarTree.sort_key)
        return node(tuple(kids))
    return t


def leaf_restrict(t: PlanarTree, keep) -> PlanarTree:
    """Keep only the vertices above the given leaf positions (1-based).

    A vertex survives iff some kept leaf lies in its subtree; the result may
    contain arity-1 vertices and may be the empty tree.
    """
    keepset = set(keep)
    for p in keepset:
        if not 1 <= p <= t.leaf_count:
            raise BadPositionError("no leaf at position %d" % p)
    if t.is_empty:
        return EMPTY

    def go(t, offset):
        if t.is_leaf:
            return t if (offset + 1) in keepset else EMPTY
        kept = []
        for c in t.children:
            r = go(c, offset)
            if not r.is_empty:
                kept.append(r)
            offset += c.leaf_count
        return node(kept) if kept else EMPTY

    return go(t, 0)


def leaf_split(t: PlanarTree, keep):
    """Split a reduced tree into the reduced restrictions to a leaf subset and its complement."""
    if not t.is_reduced:
        raise NotReducedError("leaf_split needs a reduced tree")
    keepset = set(keep)
    comp = set(range(1, t.leaf_count + 1)) - keepset
    return reduced(leaf_restrict(t, keepset)), reduced(leaf_restrict(t, comp))


def relabel(t: PlanarTree, labels) -> PlanarTree:
    """Assign the given labels to the leaves positionally."""
    labels = tuple(labels)
    if len(labels) != t.leaf_count:
        raise LabelCountMismatchError(
            "%d labels for %d leaves" % (len(labels), t.leaf_count))

    def go(t, offset):
        if t.is_leaf:
            return leaf(labels[offset])
        out = []
        for c in t.children:
            out.append(go(c, offset))
            offset += c.leaf_count
        return node(out)

    return go(t, 0) if not t.is_empty else EMPTY


# -- shuffles of reduced trees ---------------------------------------------

def _merge_counts(acc: dict, extra, factor: int = 1):
    for k, m in extra:
        acc[k] = acc.get(k, 0) + m * factor


@lru_cache(maxsize=None)
def _shuffle_pairs(t1: PlanarTree, t2: PlanarTree):
    """All trees T with a leaf subset I restricting to (t1, t2), with the
    number of such subsets.  Both arguments reduced and non-empty."""
    out: dict = {}
    # the two trees side by side under a new root
    _merge_counts(out, [(node((t1, t2)), 1), (node((t2, t1)), 1)])
    # t1 swallowed by one slot of t2's root
    if t2.is_node:
        bs = t2.children
        for pos in range(len(bs) + 1):
            _merge_counts(out, [(node(bs[:pos] + (t1,) + bs[pos:]), 1)])
        for i, b in enumerate(bs):
            _merge_counts(out, [(node(bs[:i] + (v,) + bs[i + 1:]), m)
                                for v, m in _shuffle_pairs(t1, b)])
    # t2 swallowed by one slot of t1's root
    if t1.is_node:
        as_ = t1.children
        for pos in range(len(as_) + 1):
            _merge_counts(out, [(node(as_[:pos] + (t2,) + as_[pos:]), 1)])
        for i, a in enumerate(as_):
            _merge_counts(out, [(node(as_[:i] + (v,) + as_[i + 1:]), m)
                                for v, m in _shuffle_pairs(a, t2)])
    # both roots fuse: quasi-shuffle of the two child forests
    if t1.is_node and t2.is_node:
        for ch, m in _forest_quasi_shuffles(t1.children, t2.children):
            _merge_counts(out, [(node(ch), m)])
    return tuple(sorted(out.items(), key=lambda km: km[0].sort_key()))


@lru_cache(maxsize=None)
def _forest_quasi_shuffles(a: tuple, b: tuple):
    """Interleavings of two tree sequences where aligned entries may fuse
    into a shuffle; used for the root case where both roots coincide."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict = {}
    for rest, m in _forest_quasi_shuffles(a[1:], b):
        _merge_counts(out, [((a[0],) + rest, m)])
    for rest, m in _forest_quasi_shuffles(a, b[1:]):
        _merge_counts(out, [((b[0],) + rest, m)])
    fused = _shuffle_pairs(a[0], b[0])
    for rest, m in _forest_quasi_shuffles(a[1:], b[1:]):
        _merge_counts(out, [((v,) + rest, mv * m) for v, mv in fused])
    return tuple(out.items())


def enumerate_shuffles(t1: PlanarTree, t2: PlanarTree):
    """All shuffles of two reduced trees with their subset multiplicities."""
    if t1.is_empty or t2.is_empty:
        raise EmptyTreeError("shuffle arguments must be non-empty")
    if not (t1.is_reduced and t2.is_reduced):
        raise NotReducedError("shuffle arguments must be reduced")
    return list(_shuffle_pairs(t1, t2))


def enumerate_shuffles_brute(t1: PlanarTree, t2: PlanarTree):
    """Oracle for enumerate_shuffles: scan all shapes and leaf subsets."""
    n1, n2 = t1.leaf_count, t2.leaf_count
    lab1, lab2 = t1.labels(), t2.labels()
    out: dict = {}
    for shape in _reduced_shapes(n1 + n2, False):
        for keep in itertools.combinations(range(1, n1 + n2 + 1), n1):
            keepset = set(keep)
            labels = []
            i = j = 0
            for p in range(1, n1 + n2 + 1):
                if p in keepset:
                    labels.append(lab1[i])
                    i += 1
                else:
                    labels.append(lab2[j])
                    j += 1
            cand = relabel(shape, labels)
            l, r = leaf_split(cand, keepset)
            if l is t1 and r is t2:
                out[cand] = out.get(cand, 0) + 1
    return sorted(out.items(), key=lambda km: km[0].sort_key())


# -- admissible cuts --------------------------------------------------------

def admissible_cuts(t: PlanarTree):
    """All (branch forest, trunk) pairs, one entry per admissible vertex cut.

    Includes the empty cut (empty forest, t) and the full cut ([t], EMPTY).
    Distinct cuts may repeat a pair; the multiplicity is meaningful.
    """
    if t.is_empty:
        raise EmptyTreeError("cannot cut the empty tree")

    def go(t):
        # all cuts of t; trunk EMPTY only for the full cut
        out = [(Forest((t,)), EMPTY)]
        if t.is_leaf:
            out.append((Forest(()), t))
            return out
        for parts in itertools.product(*(go(c) for c in t.children)):
            branches = Forest(())
            kept = []
            for bf, trunk in parts:
                branches = branches + bf
                if not trunk.is_empty:
                    kept.append(trunk)
            out.append((branches, graft(kept)))
        return out

    return go(t)


# -- comb presentations and the forest bijection ----------------------------

def comb_graft(ts) -> PlanarTree:
    """Right comb over the given binary trees: leaf i of the height-n comb is
    replaced by the i-th tree, the last leaf stays.  Empty sequence gives the leaf."""
    ts = tuple(ts)
    if not ts:
        return leaf(ANON)
    return node((ts[0], comb_graft(ts[1:])))


def right_comb_presentation(t: PlanarTree):
    """The unique sequence rebuilt by comb_graft; a leaf gives the empty sequence."""
    if not t.is_binary or t.is_empty:
        raise NotBinaryError("right comb presentation needs a non-empty binary tree")
    out = []
    while t.is_node:
        out.append(t.children[0])
        t = t.children[1]
    return out


def binary_to_forest(t: PlanarTree) -> Forest:
    """Bijection from binary trees onto planar forests; internal vertices map
    to vertices degree by degree."""
    if not t.is_binary or t.is_empty:
        raise NotBinaryError("binary_to_forest needs a non-empty binary tree")
    return Forest(tuple(graft(binary_to_forest(s)) for s in right_comb_presentation(t)))


def forest_to_binary(f: Forest) -> PlanarTree:
    """Inverse of binary_to_forest."""
    return comb_graft(tuple(forest_to_binary(degraft(t)) for t in f))


# -- enumeration -------------------------------------------------------------

def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _reduced_shapes(n: int, binary: bool):
    if n == 1:
        return (leaf(ANON),)
    shapes = []
    arities = (2,) if binary else range(2, n + 1)
    for k in arities:
        for comp in _compositions(n, k):
            for kids in itertools.product(*(_reduced_shapes(m, binary) for m in comp)):
                shapes.append(node(kids))
    return tuple(sorted(shapes, key=PlanarTree.sort_key))


@lru_cache(maxsize=None)
def _ptree_shapes(n: int):
    """All planar trees with n vertices (arity-1 vertices allowed)."""
    if n < 1:
        return ()
    if n == 1:
        return (leaf(ANON),)
    shapes = [node(f.trees) for f in _forest_shapes(n - 1) if len(f) > 0]
    return tuple(sorted(shapes, key=PlanarTree.sort_key))


@lru_cache(maxsize=None)
def _forest_shapes(n: int):
    """All planar forests with n vertices in total."""
    if n == 0:
        return (Forest(()),)
    out = []
    for k in range(1, n + 1):
        for t in _ptree_shapes(k):
            for rest in _forest_shapes(n - k):
                out.append(Forest((t,) + rest.trees))
    return tuple(sorted(out, key=Forest.sort_key))


def enumerate_trees(leaf_count: int, binary: bool = False, labels=None):
    """All reduced planar trees with the given number of leaves, in canonical
    order; labels, when given, are assigned positionally."""
    if leaf_count < 1:
        raise TreeError("leaf count must be >= 1")
    shapes = _reduced_shapes(leaf_count, binary)
    if labels is None:
        return list(shapes)
    labels = tuple(labels)
    if len(labels) != leaf_count:
        raise LabelCountMismatchError(
            "%d labels for %d leaves" % (len(labels), leaf_count))
    return [relabel(s, labels) for s in shapes]


def enumerate_ptrees(vertex_count: int):
    """All planar trees with the given number of vertices (not necessarily reduced)."""
    if vertex_count < 1:
        raise TreeError("vertex count must be >= 1")
    return list(_ptree_shapes(vertex_count))


def enumerate_forests(vertex_count: int):
    """All planar forests of the given total vertex count."""
    if vertex_count < 0:
        raise TreeError("vertex count must be >= 0")
    return list(_forest_shapes(vertex_count))


# -- integer sequences -------------------------------------------------------

def _series_mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > n:
            continue
        for j, bj in enumerate(b):
            if i + j > n:
                break
            out[i + j] += ai * bj
    return out


def _series_div(a, b, n):
    # b[0] must be a unit
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        acc = a[i] if i < len(a) else Fraction(0)
        for j in range(1, i + 1):
            if j < len(b):
                acc -= b[j] * out[i - j]
        out[i] = acc / b[0]
    return out


def _log_derivation(values):
    """From a_1..a_n, the coefficients of t * d/dt log(1 + sum a_k t^k)."""
    n = len(values)
    f = [Fraction(0)] + [Fraction(v) for v in values]
    fprime = [Fraction((i + 1) * f[i + 1]) for i in range(n)]
    one_plus_f = [Fraction(1)] + f[1:]
    g = _series_div(fprime, one_plus_f, n - 1)
    out = []
    for k in range(1, n + 1):
        c = g[k - 1]
        assert c.denominator == 1
        out.append(int(c))
    return out


@lru_cache(maxsize=None)
def _catalan(n: int):
    vals = [1]
    for m in range(2, n + 1):
        vals.append(sum(vals[l - 1] * vals[m - l - 1] for l in range(1, m)))
    return tuple(vals[:n])


@lru_cache(maxsize=None)
def _super_catalan(n: int):
    # f = t - t*f + 2*f^2 coefficientwise
    vals = [1]
    for m in range(2, n + 1):
        conv = sum(vals[i - 1] * vals[m - i - 1] for i in range(1, m))
        vals.append(-vals[m - 2] + 2 * conv)
    return tuple(vals[:n])


SEQUENCE_KINDS = ("catalan", "super-catalan", "log-catalan", "log-super-catalan",
                  "odd-arity", "one-var-constants")


def sequence(kind: str, count: int):
    """Exact values of the named integer sequence, indexed from n = 1."""
    if count < 1:
        raise TreeError("count must be >= 1")
    if kind == "catalan":
        return list(_catalan(count))
    if kind == "super-catalan":
        return list(_super_catalan(count))
    if kind == "log-catalan":
        return _log_derivation(_catalan(count))
    if kind == "log-super-catalan":
        return _log_derivation(_super_catalan(count))
    if kind == "odd-arity":
        cat = _catalan(count)
        logcat = _log_derivation(cat)
        return [n * cat[n - 1] - logcat[n - 1] for n in range(1, count + 1)]
    if kind == "one-var-constants":
        cat = (1,) + _catalan(count)
        return [cat[n] - cat[n - 1] for n in range(1, count + 1)]
    raise TreeError("unknown sequence kind %r" % kind)


def arity_census(t: PlanarTree):
    """(number of even-arity vertices, number of odd-arity vertices); leaves
    have arity 0 and count as even."""
    if t.is_empty:
        return (0, 0)
    if t.is_leaf:
        return (1, 0)
    even = 1 if len(t.children) % 2 == 0 else 0
    odd = 1 - even
    for c in t.children:
        e, o = arity_census(c)
        even += e
        odd += o
    return (even, odd)
