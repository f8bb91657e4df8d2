import unittest

from charvar_betti.errors import UnsupportedPartition
from charvar_betti.partitions import EMPTY, Partition as P, partitions_up_to
from charvar_betti.series import PoincareSeries
from charvar_betti.stable_oracle import (
    BaseSpace,
    ColumnOracle,
    E_series,
    E_tilde_series,
    SetPartitionOracle,
    base_series,
    default_oracle,
    lowest_degree_bound,
    make_oracle,
    oracle_column,
    oracle_general,
)


class test_base_series(unittest.TestCase):

    def test_mg(self):
        self.assertEqual(base_series(BaseSpace.MG, 8).even_coefficients(), [1, 1, 2, 3, 5])
        self.assertEqual(base_series(BaseSpace.MG, 9).odd_degrees(), [])

    def test_mg1(self):
        self.assertEqual(base_series(BaseSpace.MG1, 8).even_coefficients(), [1, 2, 4, 7, 12])

    def test_accepts_text(self):
        self.assertEqual(base_series("Mg1", 4), base_series(BaseSpace.MG1, 4))


class test_E_series(unittest.TestCase):

    def test_E(self):
        self.assertEqual(E_series(P(1), 8), PoincareSeries(8, [0, 0, 0, 0, 1, 0, 1, 0, 1]))
        self.assertEqual(
            E_series(P(1, 1), 12), PoincareSeries(12, [0] * 8 + [1, 0, 1, 0, 2])
        )
        self.assertEqual(E_series(P(3), 6), PoincareSeries.monomial(4, 6) + PoincareSeries.monomial(6, 6))
        self.assertEqual(E_series(P(4), 6), PoincareSeries.monomial(6, 6))

    def test_E_tilde(self):
        self.assertEqual(E_tilde_series(P(1), 4), PoincareSeries(4, [0, 0, 1, 0, 1]))
        self.assertEqual(E_tilde_series(P(2), 4), PoincareSeries(4, [0, 0, 0, 0, 1]))
        self.assertEqual(E_tilde_series(P(3), 4), PoincareSeries(4, [0, 0, 0, 0, 1]))

    def test_empty_partition(self):
        self.assertEqual(E_series(EMPTY, 4), PoincareSeries.one(4))


class test_oracle_column(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(oracle_column(1, BaseSpace.MG, 9), [0, 0, 0, 1, 0, 2, 0, 4, 0, 7])
        self.assertEqual(oracle_column(1, BaseSpace.MG1, 5), [0, 1, 0, 3, 0, 7])
        self.assertEqual(oracle_column(0, BaseSpace.MG, 6), base_series(BaseSpace.MG, 6))

    def test_parity(self):
        for j in range(7):
            for base in BaseSpace:
                series = oracle_column(j, base, 15)
                self.assertTrue(all(k % 2 == j % 2 for k, c in enumerate(series) if c))

    def test_negative_length(self):
        with self.assertRaises(ValueError):
            oracle_column(-1, BaseSpace.MG, 4)


class test_ColumnOracle(unittest.TestCase):

    def test_columns(self):
        oracle = ColumnOracle()
        self.assertTrue(oracle.supports(P(1, 1)))
        self.assertEqual(oracle(P(1, 1), BaseSpace.MG, 10), oracle_column(2, BaseSpace.MG, 10))

    def test_unsupported(self):
        oracle = ColumnOracle()
        self.assertFalse(oracle.supports(P(2)))
        with self.assertRaises(UnsupportedPartition) as cm:
            oracle(P(2, 1), BaseSpace.MG, 10)
        self.assertEqual(cm.exception.partition, P(2, 1))
        self.assertEqual(cm.exception.oracle_name, "column")


class test_SetPartitionOracle(unittest.TestCase):

    def setUp(self):
        self.oracle = SetPartitionOracle()

    def test_agrees_with_columns(self):
        for j in range(9):
            for base in BaseSpace:
                self.assertEqual(
                    self.oracle(P.column(j), base, 16), oracle_column(j, base, 16),
                    msg=f"<1^{j}> over {base}",
                )

    def test_symmetric_square(self):
        # invariant factor t^8 / ((1 - t^2)(1 - t^4)) against the kappa ring
        self.assertEqual(
            self.oracle(P(2), BaseSpace.MG, 12), PoincareSeries(12, [0] * 8 + [1, 0, 2, 0, 5])
        )

    def test_parity(self):
        for lam in partitions_up_to(4):
            series = self.oracle(lam, BaseSpace.MG1, 13)
            self.assertTrue(all(k % 2 == lam.size % 2 for k, c in enumerate(series) if c), msg=str(lam))

    def test_below_lowest_degree(self):
        self.assertEqual(lowest_degree_bound(EMPTY), 0)
        self.assertEqual(lowest_degree_bound(P(2, 1)), 1)
        self.assertEqual(lowest_degree_bound(P(1, 1, 1, 1)), 2)
        self.assertTrue(self.oracle(P(1, 1, 1, 1), BaseSpace.MG, 1).is_zero())

    def test_truncation_is_monotone(self):
        for lam in (P(1), P(2), P(2, 1), P(1, 1, 1), P(3, 1)):
            for base in BaseSpace:
                self.assertEqual(
                    self.oracle(lam, base, 14).truncated(8),
                    SetPartitionOracle()(lam, base, 8),
                    msg=f"{lam} over {base}",
                )

    def test_prepare_gives_same_result(self):
        requests = [(P(2, 1), BaseSpace.MG, 11), (P(2, 2), BaseSpace.MG, 10), (P(1), BaseSpace.MG1, 9)]
        prepared = SetPartitionOracle()
        prepared.prepare(requests)
        for lam, base, degree in requests:
            self.assertEqual(prepared(lam, base, degree), self.oracle(lam, base, degree))

    def test_growing_table(self):
        small = self.oracle(P(2, 1), BaseSpace.MG, 7)
        large = self.oracle(P(2, 1), BaseSpace.MG, 13)
        self.assertEqual(large.truncated(7), small)


class test_registry(unittest.TestCase):

    def test_make_oracle(self):
        self.assertIsInstance(make_oracle("column"), ColumnOracle)
        self.assertIsInstance(make_oracle("set-partition"), SetPartitionOracle)
        with self.assertRaises(ValueError):
            make_oracle("nope")

    def test_default_oracle(self):
        self.assertIs(default_oracle(), default_oracle())
        self.assertEqual(oracle_general(P(1), BaseSpace.MG, 9), oracle_column(1, BaseSpace.MG, 9))


if __name__ == '__main__':
    unittest.main()
