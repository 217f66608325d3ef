"""The four coproducts: co-addition on free tree algebras, the dendriform
coproduct, the planar-forest coproduct, and the first-leaf-product
coproduct, with the classical small examples.

Run with: python demos/02_coproducts.py
"""

from treehopf import (Forest, LinComb, coadd, coproduct, delta_bf, delta_ck,
                      delta_lr, parse_poly, parse_tree, reduced_coproduct,
                      star, tensor)

P = parse_poly

print("== co-addition on labeled trees ==")
print("D(x1)         =", coadd(P("x1")))
print("D((x1 x2))    =", coadd(P("(x1 x2)")))
print("D(((x1 x2) x3)) =", coadd(P("((x1 x2) x3)")))

print()
print("== dendriform coproduct on binary trees (leaf = unit) ==")
print("D(Y)    =", delta_lr(P("(o o)")))
f = P("2*(o (o o))") - star(P("(o o)"), P("(o o)"))
print("f       =", f)
print("D'(f)   =", reduced_coproduct("lr", f), " (primitive)")
h = P("(o ((o o) o)) - ((o (o o)) o)")
print("D'(h)   =", reduced_coproduct("lr", h))

print()
print("== planar-forest coproduct (empty forest = unit) ==")
dot = LinComb.of(Forest((parse_tree("o"),)))
lad = LinComb.of(Forest((parse_tree("(o)"),)))
print("D(o)  =", delta_ck(dot))
fck = 2 * lad - LinComb.of(Forest((parse_tree("o"), parse_tree("o"))))
print("f     =", fck)
print("D'(f) =", reduced_coproduct("ck", fck), " (primitive)")

print()
print("== first-leaf-product coproduct ==")
down = P("((o o) o)")
print("D(Y.Y) =", delta_bf(down))
print("right combs are primitive:")
for comb in ("(o o)", "(o (o o))", "(o (o (o o)))"):
    print("  D'(%s) = %s" % (comb, reduced_coproduct("bf", P(comb))))

print()
print("== every coproduct through one dispatcher ==")
for kind, arg in (("coadd", "(x1 x1)"), ("lr", "(o o)"), ("bf", "(o o)")):
    print("%-6s %s -> %s" % (kind, arg, coproduct(kind, P(arg))))
