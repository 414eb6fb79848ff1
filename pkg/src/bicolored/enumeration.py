"""Exact |B_u(p,q)| by class sums, brute-force oracles, and the orbit census."""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .perm import all_permutations, class_size, cycle_type, partitions

DEGREE_CAP = 64   # count_exact refuses degrees beyond this without an override
CENSUS_CAP = 20   # orbit_census walks 2^(p q) subsets; cap on p*q


class CapExceeded(Exception):
    """A requested computation is beyond the configured resource cap."""


@dataclass(frozen=True)
class BicoloredCount:
    p: int
    q: int
    value: int


@dataclass(frozen=True)
class OrbitCensus:
    p: int
    q: int
    orbit_count: int
    free_element_count: int
    total: int


@lru_cache(maxsize=None)
def _count_by_classes(p, q):
    # sum over partition pairs: class_size(lam) class_size(mu) 2^<lam,mu>,
    # then divide by p! q! (exactly, by Burnside)
    parts_p = [(t, class_size(t), sorted(t.counts.items())) for t in partitions(p)]
    parts_q = [(t, class_size(t), sorted(t.counts.items())) for t in partitions(q)]
    total = 0
    for _, size_mu, items_mu in parts_q:
        # weight[r] = sum over s of gcd(r,s) c_s(mu), so <lam,mu> = sum c_r weight[r]
        weight = [0] * (p + 1)
        for r in range(1, p + 1):
            weight[r] = sum(math.gcd(r, s) * c for s, c in items_mu)
        for _, size_lam, items_lam in parts_p:
            e = sum(c * weight[r] for r, c in items_lam)
            total += size_lam * size_mu * (1 << e)
    order = math.factorial(p) * math.factorial(q)
    assert total % order == 0
    return total // order


def count_exact(p, q, max_degree=DEGREE_CAP):
    """|B_u(p,q)| as the class-sum form of the permutation-pair average."""
    if p < 0 or q < 0:
        raise ValueError("p, q must be nonnegative")
    if max(p, q) > max_degree:
        raise CapExceeded("count_exact needs p, q <= %d" % max_degree)
    return _count_by_classes(p, q)


def count_naive(p, q):
    """Literal double sum over permutation pairs (test oracle, p, q <= 7)."""
    if p < 0 or q < 0:
        raise ValueError("p, q must be nonnegative")
    if max(p, q) > 7:
        raise CapExceeded("count_naive needs p, q <= 7")
    types_p = [sorted(cycle_type(s).counts.items()) for s in all_permutations(p)]
    types_q = [sorted(cycle_type(s).counts.items()) for s in all_permutations(q)]
    total = 0
    for ta in types_p:
        for tb in types_q:
            e = sum(math.gcd(r, s) * ca * cb for r, ca in ta for s, cb in tb)
            total += 1 << e
    order = math.factorial(p) * math.factorial(q)
    assert total % order == 0
    return total // order


def _cell_maps(p, q):
    """Cell index maps for generators of the row and column symmetric groups."""
    maps = []
    if p >= 2:
        swaps = list(range(p))
        swaps[0], swaps[1] = 1, 0
        cyc = [(i + 1) % p for i in range(p)]
        for rows in (swaps, cyc):
            maps.append([rows[r] * q + c for r in range(p) for c in range(q)])
    if q >= 2:
        swaps = list(range(q))
        swaps[0], swaps[1] = 1, 0
        cyc = [(i + 1) % q for i in range(q)]
        for cols in (swaps, cyc):
            maps.append([r * q + cols[c] for r in range(p) for c in range(q)])
    return maps


def _mask_table(cell_map, nbits):
    """Image of every subset mask under a cell permutation, by lowest-bit recursion."""
    bit_img = [1 << cell_map[i] for i in range(nbits)]
    table = [0] * (1 << nbits)
    for m in range(1, 1 << nbits):
        low = m & -m
        table[m] = table[m ^ low] | bit_img[low.bit_length() - 1]
    return table


def orbit_census(p, q, max_pq=CENSUS_CAP):
    """Exact orbit count and free-element count over all 2^(p q) subsets."""
    if p < 0 or q < 0:
        raise ValueError("p, q must be nonnegative")
    if p * q > max_pq:
        raise CapExceeded("orbit_census needs p*q <= %d" % max_pq)
    if p * q == 0:
        # a single empty graph; free by the p=0 / q=0 convention
        return OrbitCensus(p, q, 1, 1, 1)
    nbits = p * q
    n = 1 << nbits
    order = math.factorial(p) * math.factorial(q)
    tables = [_mask_table(cm, nbits) for cm in _cell_maps(p, q)]
    seen = bytearray(n)
    orbit_count = 0
    free_elements = 0
    for seed in range(n):
        if seen[seed]:
            continue
        orbit_count += 1
        stack = [seed]
        seen[seed] = 1
        size = 0
        while stack:
            m = stack.pop()
            size += 1
            for table in tables:
                im = table[m]
                if not seen[im]:
                    seen[im] = 1
                    stack.append(im)
        if size == order:
            free_elements += size
    return OrbitCensus(p, q, orbit_count, free_elements, n)


def free_fraction(p, q, max_pq=CENSUS_CAP):
    """f(p,q): the fraction of subsets lying in a free orbit."""
    census = orbit_census(p, q, max_pq)
    return Fraction(census.free_element_count, census.total)


def free_fraction_lower_bound(p, q, max_degree=DEGREE_CAP):
    """max(0, 2 - p! q! |B_u(p,q)| / 2^(p q))."""
    raw = 2 - Fraction(math.factorial(p) * math.factorial(q) * count_exact(p, q, max_degree),
                       1 << (p * q))
    return max(Fraction(0), raw)
