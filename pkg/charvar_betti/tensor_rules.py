"""
charvar_betti.tensor_rules.py
-----------------------------

Littlewood-Richardson coefficients and the stable tensor-product rule for
symplectic irreducibles.

In the stable range (genus at least |mu| + |nu|) the multiplicity of
S_<lambda> in S_<mu> (x) S_<nu> is the Newell-Littlewood number

    N^lambda_{mu nu} = sum_{alpha, beta, gamma} c^mu_{alpha beta} c^nu_{alpha gamma} c^lambda_{beta gamma}

i.e. the Schur expansion of sum_alpha s_{mu/alpha} s_{nu/alpha}. For two
columns this collapses to ``sp_tensor_columns``.

LR coefficients are counted directly as LR skew tableaux and memoized in
the active ``CoefficientCache``.

Usage
-----

    In [1]: from charvar_betti.partitions import Partition as P

    In [2]: lr_coefficient(P(3, 2, 1), P(2, 1), P(2, 1))

    Out [2]: 2

    In [3]: dict(sp_tensor(P(1), P(1)))

    Out [3]: {Partition(): 1, Partition(2): 1, Partition(1, 1): 1}

"""
from collections import Counter
from functools import lru_cache
from typing import Dict

from .cache import CoefficientCache
from .partitions import EMPTY, Partition, enumerate_partitions, partitions_inside

_active_cache = CoefficientCache()


def use_cache(cache: CoefficientCache) -> CoefficientCache:
    """Install ``cache`` as the memo table for all coefficient lookups."""
    global _active_cache
    _active_cache = cache
    return cache


def active_cache() -> CoefficientCache:
    return _active_cache


# Littlewood-Richardson
# ---------------------

def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    c^lambda_{mu nu}: the multiplicity of s_lambda in s_mu * s_nu.

    :return: 0 when the sizes do not add up or mu, nu do not fit in lambda
    :rtype: int
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)

    if lam.size != mu.size + nu.size:
        return 0
    if not (lam.contains(mu) and lam.contains(nu)):
        return 0
    if not nu:
        return int(lam == mu)
    if not mu:
        return int(lam == nu)

    cached = _active_cache.get("LR", lam, mu, nu)
    if cached is not None:
        return cached

    return _active_cache.put("LR", lam, mu, nu, _count_lr_tableaux(lam, mu, nu))


def _count_lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    Count fillings of lam/mu with content nu that are semistandard and whose
    reverse reading word (rows top to bottom, each right to left) is a
    lattice word.
    """
    inner = list(mu) + [0] * (len(lam) - len(mu))
    cells = [(row, col) for row in range(len(lam)) for col in range(lam[row] - 1, inner[row] - 1, -1)]
    filling = {}
    used = [0] * (len(nu) + 1)
    content = (0,) + tuple(nu)

    def place(index: int) -> int:
        if index == len(cells):
            return 1

        row, col = cells[index]
        # rows weakly increase left to right; the right neighbour is already placed
        high = filling.get((row, col + 1), len(nu))
        # columns strictly increase; cells of mu impose nothing
        low = filling.get((row - 1, col), 0) + 1 if row and col >= inner[row - 1] else 1

        total = 0
        for value in range(low, min(high, row + 1) + 1):
            if used[value] >= content[value]:
                continue
            if value > 1 and used[value] + 1 > used[value - 1]:
                continue
            used[value] += 1
            filling[(row, col)] = value
            total += place(index + 1)
            used[value] -= 1
            del filling[(row, col)]
        return total

    return place(0)


@lru_cache(maxsize=None)
def skew_expansion(lam: Partition, mu: Partition) -> Dict[Partition, int]:
    """Schur expansion of the skew Schur function s_{lam/mu}."""
    out = {}
    if not lam.contains(mu):
        return out
    for nu in partitions_inside(lam, lam.size - mu.size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


@lru_cache(maxsize=None)
def lr_product(mu: Partition, nu: Partition) -> Dict[Partition, int]:
    """Schur expansion of s_mu * s_nu."""
    if not mu:
        return {nu: 1}
    if not nu:
        return {mu: 1}

    out = {}
    longest = len(mu) + len(nu)
    for lam in enumerate_partitions(mu.size + nu.size, max_part=mu.width + nu.width):
        if len(lam) > longest:
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out


# Stable symplectic rule
# ----------------------

@lru_cache(maxsize=None)
def _newell_littlewood_product(mu: Partition, nu: Partition) -> Dict[Partition, int]:
    out = Counter()
    for k in range(min(mu.size, nu.size) + 1):
        for alpha in partitions_inside(mu, k):
            if not nu.contains(alpha):
                continue
            for beta, c_beta in skew_expansion(mu, alpha).items():
                for gamma, c_gamma in skew_expansion(nu, alpha).items():
                    for lam, c in lr_product(beta, gamma).items():
                        out[lam] += c_beta * c_gamma * c
    return dict(out)


def _ordered(mu: Partition, nu: Partition):
    mu, nu = Partition(mu), Partition(nu)
    return (mu, nu) if mu.sort_key() <= nu.sort_key() else (nu, mu)


def nl_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    Multiplicity of S_<lam> in S_<mu> (x) S_<nu> for the symplectic group of
    genus at least |mu| + |nu|.
    """
    lam = Partition(lam)
    mu, nu = _ordered(mu, nu)

    if lam.size > mu.size + nu.size or (lam.size - mu.size - nu.size) % 2:
        return 0

    cached = _active_cache.get("NL", lam, mu, nu)
    if cached is not None:
        return cached

    value = _newell_littlewood_product(mu, nu).get(lam, 0)
    return _active_cache.put("NL", lam, mu, nu, value)


def sp_tensor_columns(i: int, j: int) -> Counter:
    """
    S_<1^i> (x) S_<1^j> = sum_{a=0}^{min(i,j)} sum_{b=0}^{a} S_<2^{a-b} 1^{i+j-2a}>

    Every summand occurs once.
    """
    if i < 0 or j < 0:
        raise ValueError(f"column lengths must be non-negative: {i}, {j}")

    out = Counter()
    for a in range(min(i, j) + 1):
        for b in range(a + 1):
            out[Partition.two_columns(a - b, i + j - 2 * a)] += 1
    return out


@lru_cache(maxsize=None)
def _sp_tensor(mu: Partition, nu: Partition) -> Dict[Partition, int]:
    if mu.is_column() and nu.is_column():
        return dict(sp_tensor_columns(mu.size, nu.size))
    return _newell_littlewood_product(mu, nu)


def sp_tensor(mu: Partition, nu: Partition) -> Dict[Partition, int]:
    """
    Stable decomposition of S_<mu> (x) S_<nu> as ``{lambda: multiplicity}``.
    Two columns take the closed rule; everything else goes through the
    Newell-Littlewood expansion.
    """
    if not mu:
        return {Partition(nu): 1}
    if not nu:
        return {Partition(mu): 1}
    return _sp_tensor(*_ordered(mu, nu))


def clear_memo():
    """Forget the in-process memo tables (the active cache is left alone)."""
    for fn in (skew_expansion, lr_product, _newell_littlewood_product, _sp_tensor):
        fn.cache_clear()


__all__ = [
    "EMPTY",
    "active_cache",
    "clear_memo",
    "lr_coefficient",
    "lr_product",
    "nl_coefficient",
    "skew_expansion",
    "sp_tensor",
    "sp_tensor_columns",
    "use_cache",
]
