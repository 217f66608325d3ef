"""Acceptance criteria, one test each, with the stated runtime budgets.

Every comparison is exact (rational arithmetic); runtime bounds are asserted
with the budgets the criteria state.  Each test prints one PASS line with the
elapsed time; run with ``pytest -s tests/test_acceptance.py`` to see them.
"""

import time


from treehopf import dendriform as D
from treehopf import hopf as H
from treehopf import linear as L
from treehopf import primitives as Pr
from treehopf import trees as T
from treehopf import verify as V


def P(text):
    return L.parse_poly(text)


def _run(number, description, budget_seconds, fn):
    t0 = time.time()
    fn()
    elapsed = time.time() - t0
    print("PASS criterion %2d: %s (%.2fs, budget %ss)"
          % (number, description, elapsed, budget_seconds))
    assert elapsed < budget_seconds


def test_criterion_01_sequences():
    def body():
        rep = V.check_sequences()
        assert rep["ok"], rep
        assert T.sequence("log-super-catalan", 7) == [1, 1, 7, 33, 171, 901, 4831]

    _run(1, "integer sequences match", 1, body)


def test_criterion_02_arity_census():
    def body():
        rep = V.check_arity_census(7)
        assert rep["ok"], rep
        n4 = [r for r in rep["rows"] if r["n"] == 4][0]
        assert n4["even"] == 13 and n4["odd"] == 7

    _run(2, "even/odd arity census over planar trees", 10, body)


def test_criterion_03_coproduct_golden():
    def body():
        rep = V.check_coproduct_golden()
        assert rep["ok"], rep

    _run(3, "coproduct golden values", 1, body)


def test_criterion_04_coassociativity():
    def body():
        rep = V.check_coassociativity(5)
        assert rep["ok"], rep

    _run(4, "coassociativity of all coproducts to degree 5", 60, body)


def test_criterion_05_derivatives():
    def body():
        rep = V.check_derivatives_golden()
        assert rep["ok"], rep

    _run(5, "derivative golden values", 1, body)


def test_criterion_06_antipodes():
    def body():
        rep = V.check_antipodes(5)
        assert rep["ok"], rep

    _run(6, "antipode values and composites to degree 5", 10, body)


def test_criterion_07_taylor():
    def body():
        rep = V.check_taylor(200)
        assert rep["ok"], rep

    _run(7, "Taylor expansions and 200 reconstructions", 30, body)


def test_criterion_08_prim_dims_small():
    def body():
        for n in range(1, 5):
            assert Pr.prim_dim("mag", n)["match"]
        for n in range(1, 5):
            assert Pr.prim_dim("magw", n)["match"]

    _run(8, "primitive dimensions (mag n<=4, magw n<=4)", 60, body)


def test_criterion_08_prim_dim_mag_five():
    def body():
        rep = Pr.prim_dim("mag", 5)
        assert rep["primDim"] == 1104 == rep["formulaDim"]

    _run(8, "primitive dimension mag n=5 equals 1104", 900, body)


def test_criterion_09_named_primitives():
    def body():
        rep = V.check_named_primitives()
        assert rep["ok"], rep

    _run(9, "named primitives and non-associative Jacobi", 5, body)


def test_criterion_10_pbw():
    def body():
        rep = V.check_pbw(6, 4, 3)
        assert rep["ok"], rep

    _run(10, "shuffle-basis complement and series identity", 300, body)


def test_criterion_11_highest_weights():
    def body():
        rep = V.check_highest_weights()
        assert rep["ok"], rep

    _run(11, "highest weight dimensions 3 and 10 with membership", 30, body)


def test_criterion_12_isomorphisms():
    def body():
        rep = V.check_isomorphisms(5, 4)
        assert rep["ok"], rep

    _run(12, "graded Hopf isomorphisms", 120, body)


def test_criterion_13_shuffles():
    def body():
        rep = V.check_shuffles(5)
        assert rep["ok"], rep

    _run(13, "shuffle golden values and adjunction", 60, body)


def test_criterion_14_constants():
    def body():
        rep = V.check_constants()
        assert rep["ok"], rep
        assert rep["one_var_dims"] == [1, 0, 0, 1, 3, 9]

    _run(14, "constants dimensions and Hilbert-series relation", 60, body)
