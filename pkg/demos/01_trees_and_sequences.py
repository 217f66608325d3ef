"""Planar rooted trees: the grammar, structural surgery, enumeration, and
the Catalan family of counting sequences.

Run with: python demos/01_trees_and_sequences.py
"""

from treehopf import (arity_census, admissible_cuts, degraft,
                      enumerate_ptrees, enumerate_shuffles, enumerate_trees,
                      graft, leaf_restrict, leaf_split, mirror, parse_tree,
                      reduced, sequence, substitute_at_leaf)

print("== the tree grammar ==")
t = parse_tree("(x1 (x2 x3))")
print("parsed   ", t)
print("mirror   ", mirror(t))
print("degraft  ", degraft(t))
print("graft    ", graft(degraft(t)))
print("substitute x4 at leaf 2:", substitute_at_leaf(t, 2, parse_tree("(x4 x4)")))

print()
print("== restriction and splitting ==")
big = parse_tree("(x1 (x2) ((x3 x4)))")
print("tree           ", big)
print("restrict {1,3} ", leaf_restrict(big, {1, 3}))
print("reduced        ", reduced(leaf_restrict(big, {1, 3})))
flat = parse_tree("(x1 (x2 x3) x4)")
print("split {1,4} of", flat, "->", leaf_split(flat, {1, 4}))

print()
print("== shuffles: complementary restrictions ==")
for tree, mult in enumerate_shuffles(parse_tree("(x1 x2)"), parse_tree("x1")):
    print("  %d x %s" % (mult, tree))

print()
print("== admissible cuts of a small tree ==")
for branches, trunk in admissible_cuts(parse_tree("(o (o))")):
    print("  branches %-12s trunk %s" % (branches, trunk if not trunk.is_empty else "1"))

print()
print("== enumeration and counting ==")
print("binary trees with 4 leaves: ", len(enumerate_trees(4, binary=True)))
print("reduced trees with 4 leaves:", len(enumerate_trees(4)))
print("planar trees with 4 vertices:", len(enumerate_ptrees(4)))

print()
print("== the four counting sequences ==")
for kind in ("catalan", "super-catalan", "log-catalan", "log-super-catalan"):
    print("%-18s %s" % (kind, sequence(kind, 8)))

print()
print("== even-arity census across all planar trees ==")
print("n  #even  #odd   (even column = log-catalan)")
for n in range(1, 8):
    even = sum(arity_census(x)[0] for x in enumerate_ptrees(n))
    odd = sum(arity_census(x)[1] for x in enumerate_ptrees(n))
    print("%d  %5d  %5d" % (n, even, odd))
