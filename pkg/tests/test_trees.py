import random

import pytest

from treehopf import trees as T
from treehopf.trees import (EMPTY, BadPositionError, EmptyArgumentError,
                            EmptyTreeError, Forest, LabelCountMismatchError,
                            NotBinaryError, NotReducedError, ParseError,
                            leaf, node, parse_tree)


def t(text):
    return parse_tree(text)


class TestGrammar:
    def test_basic_forms(self):
        assert t("1") is EMPTY
        assert t("o") is leaf()
        assert t("x3") is leaf(3)
        assert t("(x1 (x2 x3))") is node((leaf(1), node((leaf(2), leaf(3)))))
        assert t("((o))").vertex_count == 3

    def test_pipe_synonym(self):
        assert t("(| |)") is t("(o o)")

    def test_round_trip(self):
        rng = random.Random(1)
        for _ in range(100):
            n = rng.randint(1, 6)
            shape = rng.choice(T.enumerate_trees(n))
            tree = T.relabel(shape, [rng.randint(0, 3) for _ in range(n)])
            assert parse_tree(T.format_tree(tree)) is tree

    def test_forest_round_trip(self):
        f = Forest((t("o"), t("(x1 x2)")))
        assert T.parse_forest(T.format_forest(f)) == f
        assert T.parse_forest("[]") == Forest(())

    def test_malcev_form(self):
        assert T.format_malcev(t("(x2 x3)")) == "cx2x3"
        assert T.format_malcev(t("(x1 ((x2 x3) x4))")) == "cx1ccx2x3x4"
        with pytest.raises(NotBinaryError):
            T.format_malcev(t("(o o o)"))

    def test_errors_carry_offset(self):
        with pytest.raises(ParseError) as e:
            parse_tree("(x1")
        assert e.value.offset == 3
        with pytest.raises(ParseError):
            parse_tree("(x1 1)")
        with pytest.raises(ParseError):
            parse_tree("x")
        with pytest.raises(ParseError):
            parse_tree("(x1 x2) trailing")


class TestGraftDegraft:
    def test_corolla(self):
        assert T.graft([leaf(), leaf()]) is t("(o o)")

    def test_empty_forest_gives_single_vertex(self):
        assert T.graft([]) is leaf()

    def test_nested(self):
        assert T.graft([leaf(1), t("(x2 x3)")]) is t("(x1 (x2 x3))")

    def test_degraft(self):
        assert T.degraft(t("(o o)")) == Forest((leaf(), leaf()))
        assert T.degraft(leaf()) == Forest(())
        assert T.degraft(t("((o) o)")) == Forest((t("(o)"), leaf()))
        with pytest.raises(EmptyTreeError):
            T.degraft(EMPTY)

    def test_mutually_inverse(self):
        for n in range(1, 6):
            for tree in T.enumerate_ptrees(n):
                assert T.graft(T.degraft(tree)) is tree


class TestSubstitute:
    def test_examples(self):
        assert T.substitute_at_leaf(t("(o o)"), 2, t("(o o)")) is t("(o (o o))")
        assert T.substitute_at_leaf(t("(x1 x2)"), 1, t("(x3 x4)")) is t("((x3 x4) x2)")

    def test_identity_leaf(self):
        tree = t("(x1 (x2 x3))")
        for i in range(1, 4):
            got = T.substitute_at_leaf(tree, i, leaf(tree.labels()[i - 1]))
            assert got is tree

    def test_leaf_count(self):
        tree = T.substitute_at_leaf(t("(o o o)"), 2, t("(o o)"))
        assert tree.leaf_count == 4

    def test_errors(self):
        with pytest.raises(BadPositionError):
            T.substitute_at_leaf(t("(o o)"), 3, leaf())
        with pytest.raises(EmptyArgumentError):
            T.substitute_at_leaf(t("(o o)"), 1, EMPTY)


class TestMirror:
    def test_examples(self):
        assert T.mirror(t("(x1 (x2 x3))")) is t("((x3 x2) x1)")
        assert T.mirror(leaf()) is leaf()
        assert T.mirror(EMPTY) is EMPTY

    def test_involution_and_invariants(self):
        for n in range(1, 7):
            for tree in T.enumerate_ptrees(n):
                m = T.mirror(tree)
                assert T.mirror(m) is tree
                assert m.leaf_count == tree.leaf_count
                assert m.vertex_count == tree.vertex_count
                assert m.is_reduced == tree.is_reduced
                assert m.is_binary == tree.is_binary


class TestReduce:
    def test_ladder(self):
        assert T.reduced(t("((o))")) is leaf()

    def test_mu_chain_example(self):
        # two arity-1 vertices below the root and inside disappear
        tree = node((node((leaf(1),)), node((leaf(2),)),
                     node((leaf(3), leaf(4)))))
        chained = node((tree,))
        got = T.reduced(chained)
        assert got is node((leaf(1), leaf(2), node((leaf(3), leaf(4)))))

    def test_idempotent_and_preserves_labels(self):
        rng = random.Random(2)
        for _ in range(50):
            base = rng.choice(T.enumerate_ptrees(rng.randint(1, 6)))
            labs = [rng.randint(1, 3) for _ in range(base.leaf_count)]
            tree = T.relabel(base, labs)
            r = T.reduced(tree)
            assert T.reduced(r) is r
            assert r.labels() == tree.labels()
            assert r.is_reduced


class TestLeafRestrict:
    def test_paper_example(self):
        tree = node((leaf(1), node((leaf(2),)), node((leaf(3), leaf(4)))))
        assert T.leaf_restrict(tree, {1, 3}) is node((leaf(1), node((leaf(3),))))

    def test_full_and_empty(self):
        tree = t("(x1 (x2 x3))")
        assert T.leaf_restrict(tree, {1, 2, 3}) is tree
        assert T.leaf_restrict(tree, set()) is EMPTY

    def test_bad_position(self):
        with pytest.raises(BadPositionError):
            T.leaf_restrict(t("(o o)"), {3})

    def test_arities_never_increase(self):
        rng = random.Random(3)
        for _ in range(50):
            tree = rng.choice(T.enumerate_trees(rng.randint(2, 6)))
            keep = {p for p in range(1, tree.leaf_count + 1) if rng.random() < 0.5}
            r = T.leaf_restrict(tree, keep)
            assert r.leaf_count == len(keep)


class TestLeafSplit:
    def test_two_leaves(self):
        assert T.leaf_split(t("(x1 x2)"), {1}) == (leaf(1), leaf(2))

    def test_full_set(self):
        tree = t("(o (o o))")
        assert T.leaf_split(tree, {1, 2, 3}) == (tree, EMPTY)

    def test_five_leaf_example(self):
        # restrictions of a 5-leaf shuffle to {1,3,4} and the complement
        tree = node((leaf(4), leaf(1), node((leaf(2), leaf(2))), leaf(1)))
        l, r = T.leaf_split(tree, {1, 3, 4})
        assert l is node((leaf(4), node((leaf(2), leaf(2)))))
        assert r is node((leaf(1), leaf(1)))

    def test_complement_symmetry(self):
        rng = random.Random(4)
        for _ in range(60):
            tree = rng.choice(T.enumerate_trees(rng.randint(1, 6)))
            keep = {p for p in range(1, tree.leaf_count + 1) if rng.random() < 0.5}
            comp = set(range(1, tree.leaf_count + 1)) - keep
            assert T.leaf_split(tree, keep) == tuple(reversed(T.leaf_split(tree, comp)))

    def test_not_reduced(self):
        with pytest.raises(NotReducedError):
            T.leaf_split(t("((o))"), {1})


class TestShuffles:
    def test_trivial_pairs(self):
        assert T.enumerate_shuffles(leaf(1), leaf(2)) == [
            (t("(x1 x2)"), 1), (t("(x2 x1)"), 1)]
        assert T.enumerate_shuffles(leaf(1), leaf(1)) == [(t("(x1 x1)"), 2)]

    def test_corolla_times_leaf(self):
        res = T.enumerate_shuffles(t("(x1 x2 x3)"), leaf(4))
        assert len(res) == 12
        assert all(m == 1 for _, m in res)

    def test_merge_equals_brute_force(self):
        rng = random.Random(5)
        for _ in range(40):
            n1, n2 = rng.randint(1, 3), rng.randint(1, 4 - 0)
            if n1 + n2 > 7:
                continue
            t1 = T.relabel(rng.choice(T.enumerate_trees(n1)),
                           [rng.randint(1, 2) for _ in range(n1)])
            t2 = T.relabel(rng.choice(T.enumerate_trees(n2)),
                           [rng.randint(1, 2) for _ in range(n2)])
            assert T.enumerate_shuffles(t1, t2) == T.enumerate_shuffles_brute(t1, t2)

    def test_multiplicity_counts_subsets(self):
        t1, t2 = t("(x1 x1)"), leaf(1)
        for tree, mult in T.enumerate_shuffles(t1, t2):
            witnesses = 0
            for keep in _subsets(tree.leaf_count, 2):
                if T.leaf_split(tree, keep) == (t1, t2):
                    witnesses += 1
            assert witnesses == mult


def _subsets(n, k):
    import itertools
    return [set(c) for c in itertools.combinations(range(1, n + 1), k)]


class TestAdmissibleCuts:
    def test_empty_and_full(self):
        tree = t("(o (o o))")
        cuts = T.admissible_cuts(tree)
        assert (Forest(()), tree) in cuts
        assert (Forest((tree,)), EMPTY) in cuts

    def test_ladder_count(self):
        tree = t("(((o)))")
        assert len(T.admissible_cuts(tree)) == 5

    def test_four_vertex_example(self):
        # cutting everything above the root leaves the bare root
        tree = node((t("(o)"), leaf()))
        cuts = T.admissible_cuts(tree)
        assert (Forest((t("(o)"), leaf())), leaf()) in cuts

    def test_count_matches_edge_antichains(self):
        for n in range(1, 8):
            for tree in T.enumerate_ptrees(n):
                assert len(T.admissible_cuts(tree)) == _antichain_count(tree) + 2

    def test_error(self):
        with pytest.raises(EmptyTreeError):
            T.admissible_cuts(EMPTY)


def _antichain_count(tree):
    # nonempty sets of inner edges with no edge above another; an edge is
    # identified with the child vertex below it
    def count_all(t):
        # number of (possibly empty) antichains in the subtree of t,
        # where selecting the root edge of t excludes everything below
        if t.is_leaf:
            return 2  # select the edge to t or not
        prod = 1
        for c in t.children:
            prod *= count_all(c)
        return prod + 1

    if tree.is_leaf:
        return 0
    prod = 1
    for c in tree.children:
        prod *= count_all(c)
    return prod - 1


class TestCombPresentation:
    def test_right_comb(self):
        comb3 = t("(o (o (o o)))")
        assert T.right_comb_presentation(comb3) == [leaf(), leaf(), leaf()]

    def test_y(self):
        assert T.right_comb_presentation(t("(o o)")) == [leaf()]

    def test_ten_vertex_example(self):
        inner = T.comb_graft((leaf(), T.comb_graft((leaf(),) * 3)))
        tree = T.comb_graft((inner, T.comb_graft((leaf(),) * 3)))
        assert tree.vertex_count == 21  # 10 internal vertices
        assert T.right_comb_presentation(tree) == [
            inner, T.comb_graft((leaf(),) * 3)]

    def test_round_trip(self):
        # internal degree up to 8
        for n in range(1, 10):
            for tree in T.enumerate_trees(n, binary=True):
                assert T.comb_graft(T.right_comb_presentation(tree)) is tree

    def test_not_binary(self):
        with pytest.raises(NotBinaryError):
            T.right_comb_presentation(t("(o o o)"))


class TestForestBijection:
    def test_leaf_and_y(self):
        assert T.binary_to_forest(leaf()) == Forest(())
        assert T.binary_to_forest(t("(o o)")) == Forest((leaf(),))

    def test_ten_vertex_example(self):
        inner = T.comb_graft((leaf(), T.comb_graft((leaf(),) * 3)))
        tree = T.comb_graft((inner, T.comb_graft((leaf(),) * 3)))
        f = T.binary_to_forest(tree)
        assert f.degree == 10
        assert len(f) == 2
        assert T.forest_to_binary(f) is tree

    def test_bijective_per_degree(self):
        cat = T.sequence("catalan", 8)
        for n in range(1, 8):
            binaries = T.enumerate_trees(n + 1, binary=True)
            images = {T.binary_to_forest(b) for b in binaries}
            assert len(images) == len(binaries) == cat[n]
            assert images == set(T.enumerate_forests(n))


class TestSortedChildren:
    def test_mirror_invariant(self):
        for n in range(1, 7):
            for tree in T.enumerate_ptrees(n):
                assert T.sorted_children(T.mirror(tree)) is T.sorted_children(tree)

    def test_counts_abstract_classes(self):
        # 1, 1, 2, 4, 9, 20 unordered rooted trees with n vertices
        expected = [1, 1, 2, 4, 9, 20]
        for n, want in enumerate(expected, start=1):
            classes = {T.sorted_children(t) for t in T.enumerate_ptrees(n)}
            assert len(classes) == want


class TestEnumeration:
    def test_counts(self):
        assert len(T.enumerate_trees(4, binary=True)) == 5
        assert len(T.enumerate_trees(4)) == 11
        assert T.enumerate_trees(1) == [leaf()]

    def test_label_mismatch(self):
        with pytest.raises(LabelCountMismatchError):
            T.enumerate_trees(3, labels=[1, 2])

    def test_canonical_order_is_strict(self):
        ts = T.enumerate_trees(5)
        keys = [x.sort_key() for x in ts]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_ptree_counts_follow_catalan(self):
        cat = T.sequence("catalan", 7)
        for n in range(1, 8):
            assert len(T.enumerate_ptrees(n)) == cat[n - 1]


class TestSequences:
    def test_catalan(self):
        assert T.sequence("catalan", 9) == [1, 1, 2, 5, 14, 42, 132, 429, 1430]

    def test_super_catalan(self):
        assert T.sequence("super-catalan", 10) == [
            1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049]

    def test_log_catalan(self):
        assert T.sequence("log-catalan", 10) == [
            1, 1, 4, 13, 46, 166, 610, 2269, 8518, 32206]

    def test_log_super_catalan(self):
        assert T.sequence("log-super-catalan", 7) == [1, 1, 7, 33, 171, 901, 4831]

    def test_one_var_constants(self):
        assert T.sequence("one-var-constants", 5) == [0, 0, 1, 3, 9]

    def test_even_arity_census(self):
        logcat = T.sequence("log-catalan", 7)
        odd = T.sequence("odd-arity", 7)
        for n in range(1, 8):
            evens = sum(T.arity_census(x)[0] for x in T.enumerate_ptrees(n))
            odds = sum(T.arity_census(x)[1] for x in T.enumerate_ptrees(n))
            assert evens == logcat[n - 1]
            assert odds == odd[n - 1]
