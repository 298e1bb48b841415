"""
Tests for the gallery orders.
"""

import unittest
from fractions import Fraction
import numpy as np
from orderspace.order.gallery import GALLERY_ORDERS, code_of, fusc, gallery, rational_of
from orderspace.util import InputError

NAMES = [ "finite(6)", "omega_plus_one", "omega_plus_omega_star", "dense_unbounded" ]


class TestGallery(unittest.TestCase):
    def test_finite(self):
        ord = gallery("finite(3)")
        self.assertEqual(list(ord.carrier()), [ 0, 1, 2 ])
        self.assertTrue(ord.less(0, 2))
        self.assertEqual(gallery("finite_4").size, 4)

    def test_unknown_name(self):
        with self.assertRaises(InputError):
            gallery("omega_squared")
        self.assertEqual(len(GALLERY_ORDERS), 4)

    def test_gap_certificates(self):
        self.assertIsNone(gallery("omega_plus_one").gap_certificate)
        self.assertIsNotNone(gallery("omega_plus_omega_star").gap_certificate)
        self.assertIsNotNone(gallery("dense_unbounded").gap_certificate)

    def test_strict_total_order_on_samples(self):
        for name in NAMES:
            ord = gallery(name)
            xs = ord.sample(8)
            for a in xs:
                self.assertFalse(ord.less(a, a), name)
                for b in xs:
                    if a != b:
                        self.assertNotEqual(ord.less(a, b), ord.less(b, a), f"{name}: {a} {b}")
                    for c in xs:
                        if ord.less(a, b) and ord.less(b, c):
                            self.assertTrue(ord.less(a, c), f"{name}: {a} {b} {c}")

    def test_omega_plus_omega_star_layout(self):
        ord = gallery("omega_plus_omega_star")
        self.assertEqual(ord.sort(range(8)), [ 0, 2, 4, 6, 7, 5, 3, 1 ])
        self.assertIsNone(ord.below(0))
        self.assertIsNone(ord.above(1))
        self.assertEqual(ord.between(4, 5), 6)
        self.assertIsNone(ord.between(5, 3))

    def test_omega_plus_one_layout(self):
        ord = gallery("omega_plus_one")
        self.assertEqual(ord.sort(range(5)), [ 0, 2, 3, 4, 1 ])
        self.assertIsNone(ord.above(1))
        self.assertEqual(ord.between(0, 1), 2)
        self.assertIsNone(ord.between(2, 3))

    def test_parity_certificate_holds(self):
        ord = gallery("omega_plus_omega_star")
        self.assertTrue(ord.gap_certificate.verify(ord, 100))

    def test_sqrt2_certificate_holds(self):
        ord = gallery("dense_unbounded")
        self.assertTrue(ord.gap_certificate.verify(ord, 200))


class TestDenseUnbounded(unittest.TestCase):
    def test_stern_sequence(self):
        self.assertEqual([ fusc(n) for n in range(1, 10) ], [ 1, 1, 2, 1, 3, 2, 3, 1, 4 ])

    def test_coding(self):
        self.assertEqual(rational_of(0), 0)
        self.assertEqual(rational_of(1), 1)
        self.assertEqual(rational_of(2), -1)
        self.assertEqual(rational_of(3), Fraction(1, 2))
        for q in (Fraction(2, 3), Fraction(-7, 5), Fraction(13, 8)):
            self.assertEqual(rational_of(code_of(q)), q)

    def test_density(self):
        ord = gallery("dense_unbounded")
        rng = np.random.default_rng(2024)
        for a, b in rng.integers(0, 500, size=(50, 2)).tolist():
            if a == b:
                continue
            lo, hi = (a, b) if ord.less(a, b) else (b, a)
            c = ord.between(lo, hi)
            self.assertTrue(ord.less(lo, c) and ord.less(c, hi))

    def test_no_endpoints(self):
        ord = gallery("dense_unbounded")
        for x in range(30):
            self.assertTrue(ord.less(x, ord.above(x)))
            self.assertTrue(ord.less(ord.below(x), x))


if __name__ == '__main__':
    unittest.main()
