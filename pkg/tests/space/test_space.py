"""
Tests for strong bases, open set codes and honest covers.
"""

import dataclasses
import itertools
import unittest
from hypothesis import given, settings, strategies as st
from orderspace.order import NEG_INF, POS_INF, WHOLE, ExtPoint, Interval, finite_order, interval_contains
from orderspace.order.gallery import gallery
from orderspace.space import (
    UNKNOWN,
    FlattenedCover,
    HonestSequence,
    OpenSetCode,
    check_base_axioms,
    enumerable_from_honest,
    enumerable_member,
    honest_flatten,
    index_code,
    is_discrete_witness,
    open_member,
    subcover_stage_bound,
    table_space,
)
from orderspace.space.injection import canonical_discreteness, double_injection, injection_space
from orderspace.topology import ordered_space
from orderspace.util import BudgetExhaustedError, InputError, triple

point = ExtPoint.point


def cells_hs(cells: dict) -> HonestSequence:
    return HonestSequence(h2=lambda m, n: cells.get((m, n), frozenset()))


class TestBaseAxioms(unittest.TestCase):
    def test_ordered_finite3_is_clean(self):
        report = check_base_axioms(ordered_space(finite_order(3)).space, 3, 25)
        self.assertTrue(report.ok, report.table())
        self.assertGreater(report.checked, 0)

    def test_corrupted_refinement_is_caught(self):
        space = ordered_space(finite_order(3)).space
        broken = dataclasses.replace(space, base=space.base.with_refine(lambda x, i, j: 0))
        report = check_base_axioms(broken, 3, 25)
        self.assertFalse(report.ok)
        self.assertIn("refine_domain", report.kinds())

    def test_refinement_to_wrong_interval_is_caught(self):
        space = ordered_space(finite_order(3)).space
        broken = dataclasses.replace(space, base=space.base.with_refine(lambda x, i, j: Interval.of(NEG_INF, 1)))
        report = check_base_axioms(broken, 3, 25)
        self.assertIn("refine_point", report.kinds())

    def test_single_point_space(self):
        space = table_space({ 0: { 0 } })
        self.assertTrue(check_base_axioms(space, 1, 1).ok)

    def test_gallery_ordered_spaces(self):
        for name in ("finite(5)", "omega_plus_one", "omega_plus_omega_star", "dense_unbounded"):
            report = check_base_axioms(ordered_space(gallery(name)).space, 8, 12)
            self.assertTrue(report.ok, f"{name}\n{report.table()}")

    def test_table_space_needs_points(self):
        with self.assertRaises(InputError):
            table_space({ 0: set() })


class TestOpenMember(unittest.TestCase):
    def setUp(self):
        self.space = ordered_space(finite_order(3)).space

    def test_whole_space_at_stage_zero(self):
        verdict = open_member(OpenSetCode(lambda n: [ WHOLE ]), 1, 10, self.space)
        self.assertTrue(verdict.found)
        self.assertEqual((verdict.stage, verdict.index), (0, WHOLE))

    def test_empty_code_is_unknown(self):
        self.assertEqual(open_member(OpenSetCode(lambda n: []), 2, 100, self.space), UNKNOWN)

    def test_first_witnessing_stage(self):
        code = OpenSetCode(lambda n: [ Interval(NEG_INF, point(n)) ])
        verdict = open_member(code, 1, 3, self.space)
        self.assertEqual(verdict.stage, 2)
        self.assertEqual(verdict.index, Interval(NEG_INF, point(2)))
        self.assertEqual(repr(verdict), "yes(2, (-inf, point(2)))")

    def test_non_index_rejected(self):
        with self.assertRaises(InputError):
            open_member(OpenSetCode(lambda n: [ 7 ]), 0, 1, self.space)


class TestHonestFlatten(unittest.TestCase):
    def test_smallest_members_in_order(self):
        g = honest_flatten(cells_hs({ (0, 0): frozenset({ 9, 5 }) }))
        self.assertEqual(g(triple(0, 0, 0)), 5)
        self.assertEqual(g(triple(0, 0, 1)), 9)

    def test_constant_table(self):
        g = honest_flatten(HonestSequence(h2=lambda m, n: { 7 }))
        self.assertTrue(all(g(p) == 7 for p in range(200)))

    def test_fallback_index(self):
        g = honest_flatten(cells_hs({ (0, 0): frozenset({ 5 }) }))
        self.assertEqual(g(triple(1, 3, 2)), 5)
        self.assertEqual(g.origin(triple(1, 3, 2)), (0, 0))

    def test_fallback_found_late(self):
        g = honest_flatten(cells_hs({ (2, 3): frozenset({ 4 }) }))
        self.assertEqual(g.fallback_origin, (2, 3))
        self.assertEqual(g(0), 4)

    def test_no_fallback_index(self):
        with self.assertRaises(BudgetExhaustedError):
            honest_flatten(cells_hs({}), fallback_scan=50)

    def test_pairing_bound(self):
        self.assertEqual(FlattenedCover.pairing_bound(0, 3, 3), 0)
        P = FlattenedCover.pairing_bound(2, 3, 2)
        codes = [ triple(m, n, s) for m in range(2) for n in range(3) for s in range(2) ]
        self.assertEqual(max(codes) + 1, P)


class TestStageBound(unittest.TestCase):
    def test_max_plus_one(self):
        hs = HonestSequence(h2=lambda m, n: { 0 })
        origins = [ (0, 0), (4, 1), (2, 0) ]
        self.assertEqual(subcover_stage_bound(3, origins.__getitem__, hs), 5)
        self.assertEqual(subcover_stage_bound(0, origins.__getitem__, hs), 0)
        self.assertEqual(subcover_stage_bound(1, origins.__getitem__, hs), 1)

    def test_provenance_checked(self):
        hs = cells_hs({ (0, 0): frozenset({ 1 }) })
        with self.assertRaises(InputError):
            subcover_stage_bound(1, lambda p: (0, 0), hs, g=lambda p: 2)


def interval_pool(n: int) -> list:
    ext = [ NEG_INF, POS_INF ] + [ point(x) for x in range(n) ]
    return [ Interval(lo, hi) for lo in ext for hi in ext ]

def points_of(intervals, ord) -> frozenset:
    return frozenset(x for x in ord.carrier() if any(interval_contains(iv, x, ord) for iv in intervals))


class TestFlattenPreservation(unittest.TestCase):
    """g covers what the honest sequence covers, and the first M rows absorb
    the first P flattened opens."""

    def check_table(self, ord, cells: dict, rows: int, cols: int):
        hs = cells_hs(cells)
        table_points = points_of([ iv for cell in cells.values() for iv in cell ], ord)
        if not any(cells.values()):
            with self.assertRaises(BudgetExhaustedError):
                honest_flatten(hs, fallback_scan=64)
            return
        g = honest_flatten(hs, fallback_scan=64)
        width = max(len(cell) for cell in cells.values())
        P = FlattenedCover.pairing_bound(rows, cols, width)
        flattened = [ g(p) for p in range(P) ]
        self.assertEqual(points_of(flattened, ord), table_points)

        M = subcover_stage_bound(P, g.origin, hs, g)
        absorbed = points_of([ iv for (m, n), cell in cells.items() if m < M for iv in cell ], ord)
        self.assertTrue(points_of(flattened, ord) <= absorbed)

    def test_exhaustive_two_by_two(self):
        for n in range(1, 5):
            ord = finite_order(n)
            pool = [ frozenset(), frozenset({ Interval(NEG_INF, point(0)) }), frozenset({ Interval(point(0), POS_INF) }), frozenset({ WHOLE, Interval.of(n - 1, 0) }) ]
            for choice in itertools.product(pool, repeat=4):
                cells = { (m, k): choice[2 * m + k] for m in range(2) for k in range(2) }
                self.check_table(ord, cells, 2, 2)

    def test_exhaustive_three_by_three(self):
        ord = finite_order(3)
        pool = [ frozenset(), frozenset({ Interval(NEG_INF, point(2)) }), frozenset({ Interval(point(0), POS_INF) }) ]
        for choice in itertools.product(pool, repeat=9):
            cells = { (m, k): choice[3 * m + k] for m in range(3) for k in range(3) }
            self.check_table(ord, cells, 3, 3)

    @settings(max_examples=150, deadline=None)
    @given(st.data())
    def test_random_three_by_three(self, data):
        n = data.draw(st.integers(1, 4))
        ord = finite_order(n)
        pool = interval_pool(n)
        rows = data.draw(st.integers(1, 3))
        cols = data.draw(st.integers(1, 3))
        cells = {
            (m, k): frozenset(data.draw(st.lists(st.sampled_from(pool), max_size=3)))
            for m in range(rows) for k in range(cols)
        }
        self.check_table(ord, cells, rows, cols)


class TestEnumerableCover(unittest.TestCase):
    def test_points_show_up_at_their_stage(self):
        os = ordered_space(finite_order(4))
        hs = cells_hs({ (0, 2): frozenset({ Interval.of(NEG_INF, 2) }), (1, 0): frozenset({ Interval.of(1, POS_INF) }) })
        cover = enumerable_from_honest(hs, os.space, 4)
        self.assertEqual(enumerable_member(cover, 1, 0, 5), 2)
        self.assertIsNone(enumerable_member(cover, 3, 0, 5))
        self.assertEqual(enumerable_member(cover, 3, 1, 5), 0)


class TestDiscreteWitness(unittest.TestCase):
    def test_canonical_witness_of_injection_space(self):
        inj = double_injection()
        self.assertTrue(is_discrete_witness(injection_space(inj), canonical_discreteness(inj), 10))

    def test_two_point_open_fails(self):
        space = table_space({ 0: { 0, 1 } })
        self.assertFalse(is_discrete_witness(space, lambda x: 0, 2))

    def test_one_point_space(self):
        space = table_space({ 0: { 0 } })
        self.assertTrue(is_discrete_witness(space, lambda x: 0, 1))


class TestIndexCode(unittest.TestCase):
    def test_codes(self):
        self.assertEqual(index_code(5), 5)
        self.assertEqual(index_code((1, (2, 0))), index_code((1, 3)))
        self.assertEqual(index_code(WHOLE), 2)
        with self.assertRaises(InputError):
            index_code(-1)
        with self.assertRaises(InputError):
            index_code("a")


if __name__ == '__main__':
    unittest.main()
