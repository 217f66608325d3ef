"""Partial derivatives on non-associative polynomials, generalized
differential operators indexed by tree monomials, and the right Taylor
expansion with its projector onto constants.

Run with: python demos/03_derivatives_and_taylor.py
"""

from treehopf import (commutator, constants_basis, mu_count, parse_poly,
                      parse_tree, partial_k, partial_kj, partial_tree,
                      taylor_expand, var)

P = parse_poly

print("== partial derivatives ==")
f = P("(x1 ((x1 x2) x2))")
print("f        =", f)
print("d_2 f    =", partial_k(2, f))
print("d_1 f    =", partial_k(1, f))
print("d_12 f   =", partial_kj(1, 2, f), "  (relabel one x1 to x2)")

print()
print("== generalized differential operators ==")
g = P("((x1 (x2 x2 x2)) ((x2 x2 x1) x2))")
s = parse_tree("((x2 x2 x2) x2)")
print("g        =", g)
print("d_S g    =", partial_tree(s, g), "  for S =", s)
print("d_T g    =", partial_tree(parse_tree("(x2 x2 x2 x2)"), g),
      " for the 4-corolla")
print("subset multiplicity mu: ", mu_count(parse_tree("x1"), parse_tree("(x1 x1)")),
      "ways to restrict (x1 x1) onto x1")

print()
print("== right Taylor expansion ==")
for text in ("(x1 (x1 x1))", "(x1 x1 x1)"):
    tay = taylor_expand(P(text), 1)
    print("f =", text)
    for j, a in sorted(tay.coefficients.items()):
        print("   exponent %s: %s" % (list(j), a))
    print("   reconstructs:", tay.reconstruct() == P(text))

print()
print("== constants ==")
print("commutator [x2,x1] =", commutator(var(2), var(1)), " kills both derivations:",
      partial_k(1, commutator(var(2), var(1))).is_zero(),
      partial_k(2, commutator(var(2), var(1))).is_zero())
print("one-variable constants dimensions, degrees 1..5:",
      [len(constants_basis("mag", degree=n)) for n in range(1, 6)])
print("a degree-4 constant:", constants_basis("mag", degree=4)[0])
