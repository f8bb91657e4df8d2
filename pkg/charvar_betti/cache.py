"""
charvar_betti.cache.py
----------------------

This module defines ``CoefficientCache``, the persisted memo table for
Littlewood-Richardson (``LR``) and Newell-Littlewood (``NL``) coefficients.

The cache is advisory: every value in it can be recomputed, and a cold,
missing or unreadable cache file only costs time.

File format
-----------

    # charvar-betti coefficient cache v1
    LR<TAB>3,2,1<TAB>2,1<TAB>2,1<TAB>2
    NL<TAB><TAB>1<TAB>1<TAB>1

One record per line: kind, lambda, mu, nu, value. Partitions are
comma-joined part lists, the empty partition is the empty string.
"""
import threading
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple, Union

from .partitions import Partition

FORMAT_VERSION = 1
HEADER = f"# charvar-betti coefficient cache v{FORMAT_VERSION}"
CACHE_FILENAME = "coefficients.tsv"
KINDS = ("LR", "NL")

Key = Tuple[str, Partition, Partition, Partition]


def canonical_key(kind: str, lam: Partition, mu: Partition, nu: Partition) -> Key:
    """Both coefficient kinds are symmetric in (mu, nu); store them sorted."""
    if kind not in KINDS:
        raise ValueError(f"unknown coefficient kind: {kind}")
    if nu.sort_key() < mu.sort_key():
        mu, nu = nu, mu
    return (kind, lam, mu, nu)


def _record_order(key: Key):
    kind, lam, mu, nu = key
    return (kind, lam.sort_key(), mu.sort_key(), nu.sort_key())


class CoefficientCache:
    """
    Thread-safe memo table keyed by ``(kind, lambda, mu, nu)``.

    ``setdefault`` semantics: the first value stored for a key wins, so
    concurrent writers of the same key all observe one value.
    """

    def __init__(self, path: Optional[Union[Path, str]] = None):
        self.path = Path(path) if path else None
        self._entries: Dict[Key, int] = {}
        self._fresh: Dict[Key, int] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def get(self, kind: str, lam: Partition, mu: Partition, nu: Partition) -> Optional[int]:
        return self._entries.get(canonical_key(kind, lam, mu, nu))

    def put(self, kind: str, lam: Partition, mu: Partition, nu: Partition, value: int) -> int:
        key = canonical_key(kind, lam, mu, nu)
        with self._lock:
            if key in self._entries:
                return self._entries[key]
            self._entries[key] = self._fresh[key] = int(value)
        return int(value)

    def counts(self) -> Dict[str, int]:
        counts = {kind: 0 for kind in KINDS}
        for kind, *_ in self._entries:
            counts[kind] += 1
        return counts

    # Merging worker results
    # ----------------------

    def drain_fresh(self) -> Dict[Key, int]:
        """Return and forget the records added since the last drain."""
        with self._lock:
            fresh, self._fresh = self._fresh, {}
        return fresh

    def merge(self, records: Iterable[Tuple[Key, int]]):
        for (kind, lam, mu, nu), value in records:
            self.put(kind, lam, mu, nu, value)

    # Persistence
    # -----------

    @classmethod
    def load(cls, path: Union[Path, str]) -> "CoefficientCache":
        """
        Read a cache file. A missing file, a different format version or a
        malformed record never raises; the bad part is ignored.
        """
        cache = cls(path)
        if not cache.path.is_file():
            return cache

        with open(cache.path, encoding="utf-8") as f:
            header = f.readline().rstrip("\n")
            if header != HEADER:
                print(f"Unexpected cache header, skipping {cache.path}")
                return cache

            for line in f:
                fields = line.rstrip("\n").split("\t")
                if len(fields) != 5 or fields[0] not in KINDS:
                    continue
                try:
                    lam, mu, nu = (Partition.from_text(x) for x in fields[1:4])
                    value = int(fields[4])
                except ValueError:
                    continue
                cache._entries[canonical_key(fields[0], lam, mu, nu)] = value

        return cache

    def save(self, path: Optional[Union[Path, str]] = None) -> Optional[Path]:
        target = Path(path) if path else self.path
        if target is None:
            return None

        target.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            records = sorted(self._entries.items(), key=lambda item: _record_order(item[0]))
            self._fresh = {}

        tmp = target.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as f:
            f.write(HEADER + "\n")
            for (kind, lam, mu, nu), value in records:
                f.write(f"{kind}\t{lam.to_text()}\t{mu.to_text()}\t{nu.to_text()}\t{value}\n")
        tmp.replace(target)

        return target


def cache_file(cache_dir: Union[Path, str]) -> Path:
    return Path(cache_dir) / CACHE_FILENAME
