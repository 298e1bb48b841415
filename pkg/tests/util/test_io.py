"""
Tests for the text formats.
"""

import os
import unittest
from orderspace.order import NEG_INF, POS_INF, ExtPoint, Interval
from orderspace.topology import ordered_space, uncovered_witness
from orderspace.util import InputError
from orderspace.util.io import (
    load_cover,
    load_order,
    load_tree,
    parse_cover,
    parse_cut,
    parse_honest,
    parse_index_stream,
    parse_order,
    parse_tree,
)
from orderspace.util.string import content_lines, split_prefixed, strip_leading_whitespace

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


class TestStringUtils(unittest.TestCase):
    def test_content_lines_drops_comments(self):
        text = "# header\n  a b  # tail\n\n c\n"
        self.assertEqual(content_lines(text), [ "a b", "c" ])

    def test_split_prefixed(self):
        self.assertEqual(split_prefixed("gallery:omega_plus_one", "gallery"), "omega_plus_one")
        self.assertIsNone(split_prefixed("tests/data/finite4.ord", "gallery"))

    def test_strip_leading_whitespace(self):
        s = """
            budget = 64
            scan = 3
        """
        self.assertEqual(strip_leading_whitespace(s), "budget = 64\nscan = 3")


class TestOrderFormat(unittest.TestCase):
    def test_labelled_finite_order(self):
        ord = load_order(os.path.join(DATA, "abcd.ord"))
        self.assertEqual(ord.size, 4)
        self.assertEqual(ord.parse_label("c"), 2)
        self.assertEqual(ord.label(3), "d")
        self.assertTrue(ord.less(ord.parse_label("a"), ord.parse_label("b")))

    def test_gallery_order(self):
        self.assertEqual(parse_order("gallery omega_plus_omega_star").name, "omega_plus_omega_star")
        self.assertEqual(load_order("gallery:finite(3)").size, 3)

    def test_bad_orders(self):
        with self.assertRaises(InputError):
            parse_order("")
        with self.assertRaises(InputError):
            parse_order("finite 3\na b")
        with self.assertRaises(InputError):
            parse_order("chain 3")
        with self.assertRaises(InputError):
            load_order("gallery:omega_squared")


class TestCoverFormat(unittest.TestCase):
    def test_bridge_cover_file(self):
        ord = load_order(os.path.join(DATA, "finite4.ord"))
        cover = load_cover(os.path.join(DATA, "bridge.cov"), ord)
        self.assertEqual(cover.length, 3)
        self.assertEqual(cover[0], Interval(NEG_INF, ExtPoint.point(2)))
        self.assertEqual(cover[2], Interval(ExtPoint.point(2), POS_INF))
        self.assertIsNone(uncovered_witness(ordered_space(ord), cover.prefix(3)))

    def test_labelled_cover(self):
        ord = load_order(os.path.join(DATA, "abcd.ord"))
        cover = parse_cover("-inf b\na +inf", ord)
        self.assertEqual(cover[1], Interval.of(0, POS_INF))

    def test_gap_cover_is_infinite(self):
        ord = load_order("gallery:omega_plus_omega_star")
        cover = load_cover(os.path.join(DATA, "gap.cov"), ord)
        self.assertIsNone(cover.length)
        self.assertEqual(cover[4], Interval(NEG_INF, ExtPoint.point(4)))
        self.assertEqual(load_cover("gallery-gap:omega_plus_omega_star", ord)[5], Interval(ExtPoint.point(5), POS_INF))

    def test_unknown_label(self):
        ord = load_order(os.path.join(DATA, "abcd.ord"))
        with self.assertRaises(InputError):
            parse_cover("-inf e", ord)
        with self.assertRaises(InputError):
            parse_cover("-inf a b", ord)


class TestCutFormat(unittest.TestCase):
    def test_listed_cut(self):
        ord = load_order(os.path.join(DATA, "abcd.ord"))
        cut = parse_cut("lower: a b\nupper: c d", ord)
        self.assertTrue(cut.lower(1))
        self.assertTrue(cut.upper(2))
        with self.assertRaises(InputError):
            parse_cut("lower: a b", ord)

    def test_gallery_gap_cut(self):
        ord = load_order("gallery:omega_plus_omega_star")
        cut = parse_cut("gallery-gap omega_plus_omega_star", ord)
        self.assertTrue(cut.lower(8))
        self.assertTrue(cut.upper(9))
        with self.assertRaises(InputError):
            parse_cut("gallery-gap omega_plus_one", ord)


class TestIndexStreamFormat(unittest.TestCase):
    def test_three_tags(self):
        self.assertEqual(parse_index_stream("0 5\n1 4 2\n2 7"), [ (0, 5), (1, (4, 2)), (2, 7) ])

    def test_malformed_index(self):
        with self.assertRaises(InputError):
            parse_index_stream("1 4")
        with self.assertRaises(InputError):
            parse_index_stream("3 1")
        with self.assertRaises(InputError):
            parse_index_stream("0 -1")


class TestHonestFormat(unittest.TestCase):
    def test_cells(self):
        ord = load_order(os.path.join(DATA, "finite4.ord"))
        hs = parse_honest("0 0: -inf 1, 2 +inf\n1 0: 0 3\n", ord)
        self.assertEqual(len(hs.cell(0, 0)), 2)
        self.assertEqual(hs.cell(1, 0), [ Interval.of(0, 3) ])
        self.assertEqual(hs.cell(5, 5), [])

    def test_malformed_cell(self):
        ord = load_order(os.path.join(DATA, "finite4.ord"))
        with self.assertRaises(InputError):
            parse_honest("0: -inf 1", ord)


class TestTreeFormat(unittest.TestCase):
    def test_tree_file(self):
        t = load_tree(os.path.join(DATA, "t3.tree"))
        self.assertEqual(set(t.finite_extent), { (), (0,), (1,) })
        self.assertEqual(t.bound(0), 2)
        self.assertEqual(t.bound(7), 2)

    def test_bound_last_value_repeats(self):
        t = parse_tree("bound: 3 2\n-\n2\n2,1")
        self.assertEqual([ t.bound(n) for n in range(4) ], [ 3, 2, 2, 2 ])

    def test_builtin(self):
        self.assertEqual(parse_tree("builtin zeros").name, "zeros")
        self.assertEqual(load_tree("builtin:binary").name, "binary")
        with self.assertRaises(InputError):
            load_tree("builtin:ternary")

    def test_bad_sequence(self):
        with self.assertRaises(InputError):
            parse_tree("-\n0,x")
        with self.assertRaises(InputError):
            parse_tree("bound: 2")

    def test_malformed_tree_rejected_on_load(self):
        with self.assertRaisesRegex(InputError, "bound"):
            parse_tree("bound: 2\n-\n3")
        with self.assertRaisesRegex(InputError, "prefix"):
            parse_tree("-\n0,1")
        with self.assertRaisesRegex(InputError, "prefix"):
            parse_tree("0")


if __name__ == '__main__':
    unittest.main()
