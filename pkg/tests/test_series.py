import unittest

from charvar_betti.errors import NegativeDegreeError, TruncationMismatch
from charvar_betti.series import PoincareSeries


class test_PoincareSeries(unittest.TestCase):

    def test_padding_and_truncation(self):
        s = PoincareSeries(4, [1, 2])
        self.assertEqual(s.coefficients, [1, 2, 0, 0, 0])
        self.assertEqual(PoincareSeries(2, [1, 2, 3, 4, 5]), [1, 2, 3])

    def test_partition_generating_function(self):
        s = PoincareSeries.free_generators([2, 4, 6, 8], 8)
        self.assertEqual(s, [1, 0, 1, 0, 2, 0, 3, 0, 5])

    def test_arithmetic(self):
        a = PoincareSeries(3, [1, 1])
        b = PoincareSeries(3, [1, 0, 1])
        self.assertEqual(a + b, [2, 1, 1, 0])
        self.assertEqual(a - b, [0, 1, -1, 0])
        self.assertEqual(a * b, [1, 1, 1, 1])
        self.assertEqual(a * 3, [3, 3, 0, 0])
        self.assertEqual(3 * a, [3, 3, 0, 0])

    def test_product_is_commutative_and_associative(self):
        a = PoincareSeries(6, [1, 2, 0, 3])
        b = PoincareSeries(6, [0, 1, 1, 0, 5])
        c = PoincareSeries(6, [2, 0, 0, 1, 0, 0, 7])
        self.assertEqual(a * b, b * a)
        self.assertEqual((a * b) * c, a * (b * c))

    def test_geometric_inverse(self):
        s = PoincareSeries.one(6).divide_by_one_minus(2, multiplicity=2)
        self.assertEqual(s, [1, 0, 2, 0, 3, 0, 4])
        with self.assertRaises(ValueError):
            PoincareSeries.one(3).divide_by_one_minus(0)

    def test_mismatched_truncation(self):
        with self.assertRaises(TruncationMismatch):
            PoincareSeries.one(3) + PoincareSeries.one(4)
        with self.assertRaises(TruncationMismatch):
            PoincareSeries.one(3) * PoincareSeries.one(4)

    def test_shift(self):
        s = PoincareSeries(2, [1, 2, 3])
        self.assertEqual(s.shifted(2), PoincareSeries(4, [0, 0, 1, 2, 3]))
        self.assertEqual(PoincareSeries(4, [0, 0, 1, 2, 3]).shifted(-2), PoincareSeries(2, [1, 2, 3]))
        with self.assertRaises(NegativeDegreeError):
            s.shifted(-1)

    def test_monomial_past_truncation(self):
        self.assertTrue(PoincareSeries.monomial(5, 4).is_zero())

    def test_truncated_is_monotone(self):
        big = PoincareSeries.free_generators([2, 4], 12)
        small = PoincareSeries.free_generators([2, 4], 6)
        self.assertEqual(big.truncated(6), small)
        with self.assertRaises(TruncationMismatch):
            small.truncated(7)

    def test_parity_helpers(self):
        s = PoincareSeries(4, [1, 0, 2, 1, 3])
        self.assertEqual(s.odd_degrees(), [3])
        self.assertEqual(s.even_coefficients(), [1, 2, 3])


if __name__ == '__main__':
    unittest.main()
