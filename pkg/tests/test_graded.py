import unittest
from math import comb

from charvar_betti.errors import RankTooSmall, TruncationMismatch
from charvar_betti.graded import (
    GradedIrrepSum,
    Group,
    coefficient_system,
    exterior_algebra_shifted,
    exterior_column_decomposition,
    sym_series,
)
from charvar_betti.partitions import EMPTY, Partition as P

from .oracles import exterior_dim, weyl_dim_sp


class test_Group(unittest.TestCase):

    def test_from_text(self):
        self.assertIs(Group.from_text("pgl"), Group.PGL)
        self.assertIs(Group.from_text(" Sl "), Group.SL)
        self.assertEqual(str(Group.GL), "GL")
        with self.assertRaises(ValueError):
            Group.from_text("SO")


class test_exterior_powers(unittest.TestCase):

    def test_column_decomposition(self):
        self.assertEqual(exterior_column_decomposition(0), [EMPTY])
        self.assertEqual(exterior_column_decomposition(1), [P(1)])
        self.assertEqual(exterior_column_decomposition(3), [P(1), P(1, 1, 1)])
        self.assertEqual(exterior_column_decomposition(4), [EMPTY, P(1, 1), P(1, 1, 1, 1)])
        with self.assertRaises(ValueError):
            exterior_column_decomposition(-1)

    def test_column_dimensions_telescope(self):
        g = 10
        for r in range(9):
            self.assertEqual(weyl_dim_sp(P.column(r), g), exterior_dim(g, r))
            total = sum(weyl_dim_sp(lam, g) for lam in exterior_column_decomposition(r))
            self.assertEqual(total, comb(2 * g, r))

    def test_shifted_algebra(self):
        ext = exterior_algebra_shifted(2, 6)
        self.assertEqual(
            ext.items(), [(EMPTY, 0, 1), (P(1), 3, 1), (EMPTY, 6, 1), (P(1, 1), 6, 1)]
        )
        unshifted = exterior_algebra_shifted(0, 2)
        self.assertEqual(
            unshifted.items(), [(EMPTY, 0, 1), (P(1), 1, 1), (EMPTY, 2, 1), (P(1, 1), 2, 1)]
        )

    def test_bad_shift(self):
        with self.assertRaises(ValueError):
            exterior_algebra_shifted(1, 6)
        with self.assertRaises(ValueError):
            exterior_algebra_shifted(-2, 6)

    def test_dimension_series(self):
        g = 10
        for shift in (0, 2, 4):
            ext = exterior_algebra_shifted(shift, 8)
            dims = ext.dimension_series(weyl_dim_sp, g)
            for k in range(9):
                expected = comb(2 * g, k // (shift + 1)) if k % (shift + 1) == 0 else 0
                self.assertEqual(dims[k], expected, msg=f"shift {shift}, degree {k}")


class test_GradedIrrepSum(unittest.TestCase):

    def test_construction_drops_high_degrees(self):
        s = GradedIrrepSum(4, {(P(1), 3): 1, (P(1), 5): 1, (EMPTY, 0): 0})
        self.assertEqual(s.items(), [(P(1), 3, 1)])
        self.assertEqual(len(s), 1)
        with self.assertRaises(ValueError):
            GradedIrrepSum(-1)

    def test_tensor(self):
        v = GradedIrrepSum(4, {(P(1), 1): 1})
        self.assertEqual(
            (v * v).items(), [(EMPTY, 2, 1), (P(2), 2, 1), (P(1, 1), 2, 1)]
        )
        self.assertEqual(v.tensor(GradedIrrepSum.unit(4)), v)

    def test_tensor_truncates(self):
        v = GradedIrrepSum(1, {(P(1), 1): 1})
        self.assertEqual(len(v * v), 0)

    def test_add(self):
        a = GradedIrrepSum(4, {(P(1), 1): 1})
        self.assertEqual((a + a).multiplicity(P(1), 1), 2)
        with self.assertRaises(TruncationMismatch):
            a + GradedIrrepSum(5)

    def test_tensor_is_commutative(self):
        a = exterior_algebra_shifted(2, 9)
        b = exterior_algebra_shifted(4, 9)
        self.assertEqual(a * b, b * a)


class test_coefficient_system(unittest.TestCase):

    def test_pgl2(self):
        self.assertEqual(coefficient_system(Group.PGL, 2, 6), exterior_algebra_shifted(2, 6))
        self.assertEqual(coefficient_system(Group.SL, 2, 6), coefficient_system(Group.PGL, 2, 6))

    def test_gl2(self):
        self.assertEqual(
            coefficient_system(Group.GL, 2, 2).items(),
            [(EMPTY, 0, 1), (P(1), 1, 1), (EMPTY, 2, 1), (P(1, 1), 2, 1)],
        )

    def test_gl_is_pgl_times_unshifted(self):
        # tensor the factors in the opposite order, unshifted one first
        D = 16
        for n in range(2, 6):
            expected = exterior_algebra_shifted(0, D)
            for i in range(n - 1, 0, -1):
                expected = expected * exterior_algebra_shifted(2 * i, D)
            self.assertEqual(coefficient_system(Group.GL, n, D), expected, msg=f"n={n}")

    def test_pgl3(self):
        system = coefficient_system(Group.PGL, 3, 5)
        self.assertEqual(
            system.items(), [(EMPTY, 0, 1), (P(1), 3, 1), (P(1), 5, 1)]
        )

    def test_dimension_matches_binomial_count(self):
        # dim wedge^*(V (x) W) counted directly
        g, D = 8, 10
        dims = coefficient_system(Group.PGL, 3, D).dimension_series(weyl_dim_sp, g)
        for k in range(D + 1):
            expected = sum(
                comb(2 * g, a) * comb(2 * g, b)
                for a in range(D + 1)
                for b in range(D + 1)
                if 3 * a + 5 * b == k
            )
            self.assertEqual(dims[k], expected, msg=f"degree {k}")

    def test_rank_too_small(self):
        with self.assertRaises(RankTooSmall):
            coefficient_system(Group.PGL, 1, 4)
        with self.assertRaises(RankTooSmall):
            sym_series(1, 4)


class test_sym_series(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(sym_series(2, 8), [1, 0, 1, 0, 2, 0, 2, 0, 3])
        self.assertEqual(sym_series(3, 4), [1, 0, 1, 0, 3])

    def test_only_even_degrees(self):
        self.assertEqual(sym_series(4, 15).odd_degrees(), [])


if __name__ == '__main__':
    unittest.main()
