import tempfile
import unittest
from pathlib import Path

from charvar_betti import tensor_rules
from charvar_betti.cache import HEADER, CoefficientCache, cache_file, canonical_key
from charvar_betti.partitions import EMPTY, Partition as P


class test_CoefficientCache(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = cache_file(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_put_and_get(self):
        cache = CoefficientCache()
        self.assertIsNone(cache.get("LR", P(3, 2, 1), P(2, 1), P(2, 1)))
        cache.put("LR", P(3, 2, 1), P(2, 1), P(2, 1), 2)
        self.assertEqual(cache.get("LR", P(3, 2, 1), P(2, 1), P(2, 1)), 2)
        self.assertEqual(len(cache), 1)

    def test_symmetric_key(self):
        cache = CoefficientCache()
        cache.put("NL", P(2), P(1), P(1, 1), 5)
        self.assertEqual(cache.get("NL", P(2), P(1, 1), P(1)), 5)
        self.assertEqual(
            canonical_key("NL", P(2), P(1, 1), P(1)), canonical_key("NL", P(2), P(1), P(1, 1))
        )
        with self.assertRaises(ValueError):
            canonical_key("XX", EMPTY, EMPTY, EMPTY)

    def test_first_value_wins(self):
        cache = CoefficientCache()
        self.assertEqual(cache.put("LR", P(2), P(1), P(1), 1), 1)
        self.assertEqual(cache.put("LR", P(2), P(1), P(1), 7), 1)
        self.assertEqual(cache.get("LR", P(2), P(1), P(1)), 1)

    def test_drain_fresh(self):
        cache = CoefficientCache()
        cache.put("LR", P(2), P(1), P(1), 1)
        fresh = cache.drain_fresh()
        self.assertEqual(len(fresh), 1)
        self.assertEqual(cache.drain_fresh(), {})
        self.assertEqual(len(cache), 1)

    def test_merge(self):
        worker = CoefficientCache()
        worker.put("NL", EMPTY, P(1), P(1), 1)
        worker.put("LR", P(1, 1), P(1), P(1), 1)

        parent = CoefficientCache()
        parent.merge(worker.drain_fresh().items())
        self.assertEqual(parent.counts(), {"LR": 1, "NL": 1})
        self.assertEqual(parent.get("NL", EMPTY, P(1), P(1)), 1)

    def test_save_and_load(self):
        cache = CoefficientCache(self.path)
        cache.put("LR", P(3, 2, 1), P(2, 1), P(2, 1), 2)
        cache.put("NL", EMPTY, P(1), P(1), 1)
        self.assertEqual(cache.save(), self.path)

        lines = self.path.read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], HEADER)
        self.assertIn("NL\t\t1\t1\t1", lines)

        loaded = CoefficientCache.load(self.path)
        self.assertEqual(loaded.get("LR", P(3, 2, 1), P(2, 1), P(2, 1)), 2)
        self.assertEqual(loaded.get("NL", EMPTY, P(1), P(1)), 1)
        self.assertEqual(loaded.drain_fresh(), {})

    def test_missing_file(self):
        cache = CoefficientCache.load(Path(self.tmp.name) / "nope.tsv")
        self.assertEqual(len(cache), 0)

    def test_unexpected_header(self):
        self.path.write_text("# some other cache v9\nLR\t2\t1\t1\t1\n", encoding="utf-8")
        self.assertEqual(len(CoefficientCache.load(self.path)), 0)

    def test_bad_records_are_skipped(self):
        self.path.write_text(
            "\n".join([
                HEADER,
                "LR\t2\t1\t1\t1",
                "LR\t1,2\t1\t1\t1",
                "LR\t2\t1\t1\tx",
                "QQ\t2\t1\t1\t1",
                "NL\t2\t1",
            ]) + "\n",
            encoding="utf-8",
        )
        cache = CoefficientCache.load(self.path)
        self.assertEqual(len(cache), 1)
        self.assertEqual(cache.get("LR", P(2), P(1), P(1)), 1)

    def test_lookups_fill_active_cache(self):
        previous = tensor_rules.active_cache()
        try:
            cache = tensor_rules.use_cache(CoefficientCache())
            self.assertEqual(tensor_rules.lr_coefficient(P(3, 2, 1), P(2, 1), P(2, 1)), 2)
            self.assertEqual(cache.get("LR", P(3, 2, 1), P(2, 1), P(2, 1)), 2)
            self.assertEqual(tensor_rules.nl_coefficient(P(2), P(1), P(1)), 1)
            self.assertEqual(cache.counts()["NL"], 1)
        finally:
            tensor_rules.use_cache(previous)


if __name__ == '__main__':
    unittest.main()
