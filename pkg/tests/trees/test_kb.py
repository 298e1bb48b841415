"""
Tests for the Kleene-Brouwer order, its neighbours and discreteness witness.
"""

import itertools
import unittest
import numpy as np
from orderspace.order import NEG_INF, POS_INF, Comparison, ExtPoint, Interval, interval_contains
from orderspace.topology import finite_cover_check, ordered_space
from orderspace.trees import (
    TreePresentation,
    check_tree,
    format_seq,
    kb_compare,
    kb_discrete_witness,
    kb_less,
    kb_predecessor,
    kb_sorted,
    kb_successor,
    kb_view,
    leftmost_leaf,
    parse_seq,
)
from orderspace.trees.builtin import get_tree
from orderspace.util import DepthCapExceededError, InputError, seq_code

point = ExtPoint.point


def bounded_tree(seqs, g: int, name: str = "tree") -> TreePresentation:
    return TreePresentation.from_sequences(seqs, bound=lambda n: g, name=name)

T3 = bounded_tree([ (), (0,), (1,) ], 2, "t3")


def random_trees(count: int, seed: int) -> list:
    """Bounded trees with at most 40 nodes, entries < 4 and depth <= 5."""
    rng = np.random.default_rng(seed)
    trees = []
    for k in range(count):
        target = int(rng.integers(1, 41))
        nodes = { () }
        for _ in range(200):
            if len(nodes) >= target:
                break
            parents = sorted(s for s in nodes if len(s) < 5)
            parent = parents[int(rng.integers(len(parents)))]
            nodes.add(parent + (int(rng.integers(4)),))
        trees.append(bounded_tree(nodes, 4, f"random{k}"))
    return trees

def small_binary_trees(max_nodes: int) -> list:
    """Every tree over {0, 1} with at most max_nodes nodes."""
    seen = { frozenset({ () }) }
    frontier = list(seen)
    while frontier:
        grown = []
        for nodes in frontier:
            if len(nodes) == max_nodes:
                continue
            for s in nodes:
                for v in (0, 1):
                    child = s + (v,)
                    if child not in nodes:
                        bigger = nodes | { child }
                        if bigger not in seen:
                            seen.add(bigger)
                            grown.append(bigger)
        frontier = grown
    return [ bounded_tree(nodes, 2) for nodes in seen ]


class TestKbCompare(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(kb_compare((1, 0), (1,)), Comparison.LT)
        self.assertEqual(kb_compare((0,), (1,)), Comparison.LT)
        self.assertEqual(kb_compare((2, 7), (2, 7)), Comparison.EQ)
        self.assertEqual(kb_compare((), (5, 5)), Comparison.GT)

    def test_total_and_transitive(self):
        seqs = [ s for n in range(4) for s in itertools.product(range(3), repeat=n) ]
        for a in seqs:
            for b in seqs:
                c = kb_compare(a, b)
                self.assertEqual(c == Comparison.EQ, a == b)
                self.assertEqual(c.flip(), kb_compare(b, a))
        for a, b, c in itertools.product(seqs, repeat=3):
            if kb_less(a, b) and kb_less(b, c):
                self.assertTrue(kb_less(a, c), f"{a} {b} {c}")

    def test_sorted_small_tree(self):
        self.assertEqual(kb_sorted(T3), [ (0,), (1,), () ])
        self.assertEqual(kb_sorted([ (), (0,), (0, 1), (1,) ]), [ (0, 1), (0,), (1,), () ])


class TestCheckTree(unittest.TestCase):
    def test_clean_tree(self):
        self.assertTrue(check_tree(T3, 3).ok)

    def test_missing_prefix(self):
        report = check_tree(TreePresentation.from_sequences([ (), (0, 1) ]), 3)
        self.assertEqual(report.kinds(), { "prefix" })

    def test_bound_violation(self):
        report = check_tree(bounded_tree([ (), (3,) ], 2), 3)
        self.assertIn("bound", report.kinds())

    def test_builtin_trees(self):
        for name in ("zeros", "zeros_noise", "alternating", "binary", "comb", "staircase"):
            self.assertTrue(check_tree(get_tree(name), 4).ok, name)


class TestSequences(unittest.TestCase):
    def test_format_and_parse(self):
        self.assertEqual(format_seq(()), "-")
        self.assertEqual(format_seq((1, 0, 2)), "1,0,2")
        self.assertEqual(parse_seq("-"), ())
        self.assertEqual(parse_seq(" 3,1 "), (3, 1))
        with self.assertRaises(InputError):
            parse_seq("1,-2")


class TestLeftmostLeaf(unittest.TestCase):
    def setUp(self):
        self.t = TreePresentation.from_sequences([ (), (0,), (1,), (1, 0) ])

    def test_examples(self):
        self.assertEqual(leftmost_leaf(self.t, ()), (0,))
        self.assertEqual(leftmost_leaf(self.t, (1,)), (1, 0))
        self.assertEqual(leftmost_leaf(self.t, (1, 0)), (1, 0))

    def test_depth_cap(self):
        with self.assertRaises(DepthCapExceededError):
            leftmost_leaf(get_tree("zeros"), (), 10)
        self.assertEqual(leftmost_leaf(get_tree("zeros"), (1,), 10), (1,))

    def test_non_member(self):
        with self.assertRaises(InputError):
            leftmost_leaf(self.t, (2,))


class TestNeighbours(unittest.TestCase):
    def test_predecessor_examples(self):
        self.assertEqual(kb_predecessor(T3, ()), (1,))
        self.assertEqual(kb_predecessor(T3, (1,)), (0,))
        self.assertEqual(kb_predecessor(T3, (0,)), NEG_INF)

    def test_successor_examples(self):
        self.assertEqual(kb_successor(T3, (0,)), (1,))
        self.assertEqual(kb_successor(T3, (1,)), ())
        self.assertEqual(kb_successor(T3, ()), POS_INF)

    def test_successor_descends(self):
        t = bounded_tree([ (), (0,), (1,), (1, 0), (1, 0, 1) ], 2)
        self.assertEqual(kb_successor(t, (0,)), (1, 0, 1))

    def test_infinite_tree_neighbours(self):
        t = get_tree("zeros_noise")
        self.assertEqual(kb_predecessor(t, (1,)), (1, 2))
        self.assertEqual(kb_predecessor(t, (1, 0)), (0,))
        self.assertEqual(kb_successor(t, (0,)), (1, 0))
        self.assertEqual(kb_successor(t, (0, 2)), (0,))

    def test_successor_without_leftmost_leaf(self):
        with self.assertRaises(DepthCapExceededError):
            kb_successor(get_tree("binary"), (0,), 8)


class TestDiscreteWitness(unittest.TestCase):
    def test_small_tree(self):
        d = kb_discrete_witness(T3)
        self.assertEqual(d((1,)), Interval(point(seq_code((0,))), point(seq_code(()))))
        self.assertEqual(d((0,)), Interval(NEG_INF, point(seq_code((1,)))))

    def test_singleton_tree(self):
        d = kb_discrete_witness(bounded_tree([ () ], 1))
        self.assertEqual(d(()), Interval(NEG_INF, POS_INF))

    def test_view_is_an_order(self):
        view = kb_view(T3)
        self.assertEqual(list(view.carrier()), [ 0, 1, 2 ])
        self.assertTrue(view.less(seq_code((0,)), seq_code((1,))))
        self.assertEqual(view.label(seq_code((1,))), "1")
        self.assertEqual(view.parse_label("-"), 0)

    def test_witnesses_cover_the_view(self):
        d = kb_discrete_witness(T3)
        os = ordered_space(kb_view(T3))
        self.assertTrue(finite_cover_check(os, [ d(s) for s in T3.finite_extent ]))
        self.assertFalse(finite_cover_check(os, [ d(s) for s in T3.finite_extent if s != () ]))


class TestNeighbourOracle(unittest.TestCase):
    """Predecessor and successor agree with adjacency in the sorted node
    list, and each witness interval isolates its node."""

    def check_tree(self, t: TreePresentation):
        nodes = kb_sorted(t)
        view = kb_view(t)
        d = kb_discrete_witness(t)
        for rank, s in enumerate(nodes):
            expected_pred = nodes[rank - 1] if rank > 0 else NEG_INF
            expected_succ = nodes[rank + 1] if rank + 1 < len(nodes) else POS_INF
            self.assertEqual(kb_predecessor(t, s), expected_pred, f"{t.name}: pred {format_seq(s)}")
            self.assertEqual(kb_successor(t, s), expected_succ, f"{t.name}: succ {format_seq(s)}")
            isolated = [ c for c in view.carrier() if interval_contains(d(s), c, view) ]
            self.assertEqual(isolated, [ seq_code(s) ], f"{t.name}: d({format_seq(s)})")

    def test_random_bounded_trees(self):
        for t in random_trees(200, seed=11):
            self.check_tree(t)

    def test_all_small_binary_trees(self):
        trees = small_binary_trees(7)
        self.assertEqual(len(trees), 1 + 2 + 5 + 14 + 42 + 132 + 429)
        for t in trees:
            self.check_tree(t)


if __name__ == '__main__':
    unittest.main()
