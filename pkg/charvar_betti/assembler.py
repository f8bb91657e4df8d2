"""
charvar_betti.assembler.py
--------------------------

Assemble stable Betti series of the PGL / SL / GL character varieties:

    PGL:  H^*(M_g;     wedge^*(V_g (x) W~_n)) (x) Sym^*(V_o (x) W~_n)
    SL:   H^*(M_{g,1}; wedge^*(V_g (x) W~_n)) (x) Sym^*(V_o (x) W~_n)
    GL:   H^*(M_{g,1}; wedge^*(V_g (x) W_n))  (x) Sym^*(V_o (x) W~_n)

``closed_form_n2`` evaluates the rank-2 sums term by term as an
independent check on ``betti_series``.

Usage
-----

    In [1]: from charvar_betti.assembler import betti_series

    In [2]: betti_series("PGL", 2, 8).coefficients

    Out [2]: [1, 0, 2, 0, 5, 0, 11, 0, 23]

"""
from typing import List

from .errors import OracleCapabilityExceeded, RankTooSmall
from .graded import Group, coefficient_system, sym_series
from .partitions import Partition, enumerate_partitions, partition_count
from .series import PoincareSeries
from .stable_oracle import (
    BaseSpace,
    E_series,
    E_tilde_series,
    StableOracle,
    default_oracle,
    lowest_degree_bound,
)


def base_for(group: Group) -> BaseSpace:
    return BaseSpace.MG if Group(group) is Group.PGL else BaseSpace.MG1


def betti_series(
    group: Group,
    n: int,
    degree: int,
    oracle: StableOracle = None,
    base: BaseSpace = None,
) -> PoincareSeries:
    """
    Stable Poincare series through ``degree``.

    :param group: PGL, SL or GL
    :type group: Group or str
    :param n: rank, at least 2
    :type n: int
    :param degree: truncation degree D
    :type degree: int
    :param oracle: source of H^*(b; S_<lambda>); the set-partition oracle by default
    :type oracle: StableOracle, optional
    :param base: override of the base moduli space (M_g for PGL, M_{g,1} otherwise)
    :type base: BaseSpace, optional
    :return: sum over (lambda, d, m) of m t^d H^*(b; S_<lambda>), times Sym^*(V_o (x) W~_n)
    :rtype: PoincareSeries
    """
    if n < 2:
        raise RankTooSmall(n)

    group = Group(group)
    oracle = oracle or default_oracle()
    base = BaseSpace(base) if base else base_for(group)

    # terms whose lowest possible degree is past the truncation contribute nothing
    terms = [
        (lam, d, m)
        for lam, d, m in coefficient_system(group, n, degree).items()
        if lowest_degree_bound(lam) <= degree - d
    ]

    unsupported = sorted(
        {lam for lam, _, _ in terms if not oracle.supports(lam)}, key=Partition.sort_key
    )
    if unsupported:
        raise OracleCapabilityExceeded(unsupported, oracle.name)

    oracle.prepare([(lam, base, degree - d) for lam, d, _ in terms])

    total = PoincareSeries.zero(degree)
    for lam, d, m in terms:
        total = total + oracle(lam, base, degree - d).shifted(d) * m

    return total * sym_series(n, degree)


def min_valid_genus(n: int, degree: int) -> int:
    """
    Least g >= 2 with 3D <= 2g - 2 and D <= 2(g - 1)(n - 1) + 2.

    Both ranges are imposed.
    """
    if n < 2:
        raise RankTooSmall(n)
    if degree < 0:
        raise ValueError(f"degree must be non-negative: {degree}")

    g = 2
    while 3 * degree > 2 * g - 2 or degree > 2 * (g - 1) * (n - 1) + 2:
        g += 1
    return g


# Rank-2 closed forms
# -------------------

def _alpha_beta_counts(degree: int) -> List[int]:
    """Dimensions of Q[alpha_2, beta_4] in degrees 0..D."""
    counts = [0] * (degree + 1)
    for q in range(0, degree + 1, 4):
        for m in range(q, degree + 1, 2):
            counts[m] += 1
    return counts


def _kappa_ring(base: BaseSpace, degree: int) -> PoincareSeries:
    """p(k) in degree 2k, summed over e_2 powers for M_{g,1}."""
    coefficients = [0] * (degree + 1)
    for k in range(0, degree // 2 + 1):
        if base is BaseSpace.MG:
            coefficients[2 * k] = partition_count(k)
        else:
            coefficients[2 * k] = sum(partition_count(i) for i in range(k + 1))
    return PoincareSeries(degree, coefficients)


def _column_sums(group: Group, degree: int) -> List[PoincareSeries]:
    """(sum_{lambda |- j} F_lambda) (x) H^*(b) for j = 0..D/3."""
    base = base_for(group)
    F = E_series if group is Group.PGL else E_tilde_series
    ring = _kappa_ring(base, degree)

    sums = []
    for j in range(degree // 3 + 1):
        total = PoincareSeries.zero(degree)
        for lam in enumerate_partitions(j):
            total = total + F(lam, degree)
        sums.append(total * ring)
    return sums


def _closed_form_exterior(group: Group, degree: int) -> PoincareSeries:
    # wedge^r V_g[-2] sits in degree 3r; each S_<1^j> in it reads its
    # coefficients j degrees higher
    Q = _alpha_beta_counts(degree)
    P = _column_sums(group, degree)

    betti = [0] * (degree + 1)
    for k in range(degree + 1):
        for r in range(k // 3 + 1):
            for m in range(0, k - 3 * r + 1, 2):
                for j in range(r % 2, r + 1, 2):
                    betti[k] += P[j][k - 3 * r - m + j] * Q[m]
    return PoincareSeries(degree, betti)


def _closed_form_gl2(degree: int, oracle: StableOracle) -> PoincareSeries:
    # wedge^{r1} V_g in degree r1 and wedge^{r2} V_g[-2] in degree 3 r2; the
    # pair (S_<1^i>, S_<1^j>) splits into S_<2^{a-b} 1^{i+j-2a}>
    Q = _alpha_beta_counts(degree)
    base = BaseSpace.MG1

    shapes = {}
    for r2 in range(degree // 3 + 1):
        for r1 in range(degree - 3 * r2 + 1):
            top = degree - r1 - 3 * r2
            for i in range(r1 % 2, r1 + 1, 2):
                for j in range(r2 % 2, r2 + 1, 2):
                    for a in range(min(i, j) + 1):
                        for b in range(a + 1):
                            lam = Partition.two_columns(a - b, i + j - 2 * a)
                            if lowest_degree_bound(lam) <= top:
                                shapes[lam] = max(shapes.get(lam, 0), top)

    oracle.prepare([(lam, base, top) for lam, top in shapes.items()])
    H = {lam: oracle(lam, base, top) for lam, top in shapes.items()}

    betti = [0] * (degree + 1)
    for r2 in range(degree // 3 + 1):
        for r1 in range(degree - 3 * r2 + 1):
            top = degree - r1 - 3 * r2
            inner = [0] * (top + 1)
            for i in range(r1 % 2, r1 + 1, 2):
                for j in range(r2 % 2, r2 + 1, 2):
                    for a in range(min(i, j) + 1):
                        for b in range(a + 1):
                            lam = Partition.two_columns(a - b, i + j - 2 * a)
                            if lam in H:
                                for h in range(top + 1):
                                    inner[h] += H[lam][h]
            for h, c in enumerate(inner):
                if not c:
                    continue
                for m in range(0, top - h + 1, 2):
                    betti[h + m + r1 + 3 * r2] += c * Q[m]
    return PoincareSeries(degree, betti)


def closed_form_n2(group: Group, degree: int, oracle: StableOracle = None) -> PoincareSeries:
    """
    Rank-2 Betti series from the explicit sums over (r, m, i) for PGL and
    SL, and over (r_1, r_2, m, i, j, a, b) for GL.

    The GL sum needs H^*(M_{g,1}; S_<2^{a-b} 1^{i+j-2a}>), which is read
    from ``oracle``.
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative: {degree}")

    group = Group(group)
    if group is Group.GL:
        return _closed_form_gl2(degree, oracle or default_oracle())
    return _closed_form_exterior(group, degree)
