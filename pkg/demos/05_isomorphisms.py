"""The graded Hopf isomorphisms between the dendriform algebra on binary
trees, the planar-forest algebra, and the first-leaf-product algebra.

Run with: python demos/05_isomorphisms.py
"""

from treehopf import (Forest, LinComb, parse_poly, parse_tree, psi,
                      reduced_coproduct, star, theta, verify_hopf_morphism,
                      xi)

P = parse_poly


def flc(*texts):
    return LinComb.of(Forest(tuple(parse_tree(t) for t in texts)))


print("== xi: forests into binary trees ==")
print("xi [o]     =", xi(flc("o")))
print("xi [(o)]   =", xi(flc("(o)")))
print("xi [o; o]  =", xi(flc("o", "o")), "  (the star product of two copies)")

print()
print("== theta: the per-degree exact inverse ==")
print("theta (o o)      =", theta(P("(o o)")))
print("theta (o (o o))  =", theta(P("(o (o o))")))
f = P("2*(o (o o))") - star(P("(o o)"), P("(o o)"))
tf = theta(f)
print("theta f          =", tf)
print("image is primitive for the forest coproduct:",
      reduced_coproduct("ck", tf).is_zero())

print()
print("== psi: from the first-leaf product to the dendriform product ==")
print("psi (o o)      =", psi(P("(o o)")))
print("psi (o (o o))  =", psi(P("(o (o o))")),
      " (a dendriform primitive)")
for comb in ("(o (o (o o)))", "(o (o (o (o o))))"):
    img = psi(P(comb))
    print("psi %s is dendriform-primitive: %s"
          % (comb, reduced_coproduct("lr", img).is_zero()))

print()
print("== full verification ==")
for name, cap in (("theta", 5), ("psi", 4)):
    rep = verify_hopf_morphism(name, cap)
    print("%-6s degree <= %d: multiplicative, intertwining, bijective -> %s"
          % (name, cap, "ok" if rep["ok"] else rep["failures"][:2]))
