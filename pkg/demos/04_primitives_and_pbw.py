"""Primitive elements: exact dimensions against the logarithmic-derivation
formulas, the non-associative Jacobi identity, the shuffle complement, and
highest weight vectors.

Run with: python demos/04_primitives_and_pbw.py
"""

from treehopf import (component, highest_weight_basis, jacobi_check,
                      named_primitives, pbw_check, prim_basis, prim_dim,
                      shuffle)
from treehopf.primitives import exp_series_identity

print("== dimensions of the multilinear primitive spaces ==")
for operad, cap in (("mag", 4), ("magw", 4)):
    for n in range(1, cap + 1):
        r = prim_dim(operad, n)
        print("%-4s n=%d  ambient %4d  primitive %4d  formula %4d  %s"
              % (operad, n, r["ambientDim"], r["primDim"], r["formulaDim"],
                 "ok" if r["match"] else "MISMATCH"))
print("(mag n=5 gives 1104 in a few seconds; see the acceptance suite)")

print()
print("== the first primitive elements ==")
for name, f in named_primitives().items():
    head = repr(f)
    print("%-20s %s" % (name, head if len(head) < 70 else head[:67] + "..."))

print()
print("== the non-associative Jacobi identity ==")
for key, ok in jacobi_check().items():
    print("  %-28s %s" % (key, ok))

print()
print("== the shuffle algebra is free on the primitives ==")
for n in range(2, 7):
    r = pbw_check("mag", n)
    print("one variable, degree %d: %2d shuffle monomials + %2d primitives"
          " = %2d = component dimension (%s)"
          % (n, r["shuffleCount"], r["primDim"], r["ambientDim"],
             "ok" if r["ok"] else "FAIL"))
print("series identity exp(primitives) - 1 = operad series:",
      exp_series_identity("mag", 5) and exp_series_identity("magw", 4))

print()
print("== highest weight vectors ==")
hw = highest_weight_basis((3, 1), "primitive")
print("multidegree (3,1), primitive: dimension", len(hw))
print("sample:", hw[0])
print("one variable, degree 4, primitive: dimension",
      len(highest_weight_basis((4,), "primitive")))

print()
print("== a primitive basis in low degree ==")
for p in prim_basis(component("mag", multilinear=3))[:4]:
    print("  ", p)
