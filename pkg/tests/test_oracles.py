import unittest
from math import comb

from charvar_betti.partitions import EMPTY, Partition as P

from .oracles import exterior_dim, lr_bruteforce, sp_character_check, weyl_dim_sp


class test_weyl_dim_sp(unittest.TestCase):

    def test_examples(self):
        for g in range(1, 6):
            self.assertEqual(weyl_dim_sp(P(1), g), 2 * g)
            self.assertEqual(weyl_dim_sp(EMPTY, g), 1)
        self.assertEqual(weyl_dim_sp(P(1, 1), 2), 5)
        self.assertEqual(weyl_dim_sp(P(2), 2), 10)

    def test_too_many_parts(self):
        with self.assertRaises(ValueError):
            weyl_dim_sp(P(1, 1, 1), 2)

    def test_columns_telescope(self):
        for g in range(1, 9):
            for k in range(g + 1):
                self.assertEqual(weyl_dim_sp(P.column(k), g), exterior_dim(g, k))
                total = sum(exterior_dim(g, i) for i in range(k % 2, k + 1, 2))
                self.assertEqual(total, comb(2 * g, k))


class test_reference_checks(unittest.TestCase):

    def test_lr_bruteforce_guard(self):
        with self.assertRaises(ValueError):
            lr_bruteforce(P(8, 7), P(8), P(7))
        self.assertEqual(lr_bruteforce(P(3, 2, 1), P(2, 1), P(2, 1)), 2)

    def test_character_check_is_seeded(self):
        self.assertEqual(
            sp_character_check(P(2), P(1, 1), 4), sp_character_check(P(2), P(1, 1), 4)
        )
        self.assertTrue(sp_character_check(EMPTY, P(3), 3))


if __name__ == '__main__':
    unittest.main()
