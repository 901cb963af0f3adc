"""Shared oracles and random generators for the test suite.

Everything here is deliberately independent of the library internals it
checks: counts come from closed forms, Schur polynomials from the dual
Jacobi-Trudi determinant, and random polynomials from seeded generators.
"""

import itertools
import math

from nchilb.polynomial import SparsePoly, elementary_symmetric, from_elementary


def fuss_catalan_trees(m, size):
    """Closed-form number of m-ary trees with `size` nodes."""
    if size == 0:
        return 1
    if m == 0:
        return 1 if size == 1 else 0
    return math.comb(m * size, size) // ((m - 1) * size + 1)


def forest_count_oracle(m, d, n):
    """Number of forests by convolving the closed-form tree counts."""
    counts = [0] * (d + 1)
    counts[0] = 1
    for _ in range(n):
        fresh = [0] * (d + 1)
        for total in range(d + 1):
            for size in range(total + 1):
                fresh[total] += counts[total - size] * fuss_catalan_trees(m, size)
        counts = fresh
    return counts[d]


def d_value_oracle(forest):
    """Count the pairs (element, critical pair) with the element strictly below."""
    from nchilb.forests import critical_pairs

    count = 0
    for k, w in forest.pairs():
        for k2, w2 in critical_pairs(forest):
            if k < k2 or (k == k2 and w < w2):
                count += 1
    return count


def conjugate_partition(lam):
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def jacobi_trudi_schur(lam, d):
    """Dual Jacobi-Trudi determinant det(e_{lam'_i - i + j}) expanded by permutations."""
    lamc = conjugate_partition(tuple(lam))
    n = len(lamc)
    if n == 0:
        return SparsePoly.const(d, 1)

    def e(k):
        if k < 0:
            return SparsePoly.zero(d)
        return elementary_symmetric(k, d)

    total = SparsePoly.zero(d)
    for sigma in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
        )
        term = SparsePoly.const(d, (-1) ** inversions)
        for i in range(n):
            term = term * e(lamc[i] - (i + 1) + (sigma[i] + 1))
        total = total + term
    return total


def random_poly(rng, nvars, max_deg=2, nterms=4, coef_bound=5):
    terms = {}
    for _ in range(nterms):
        exp = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        coef = rng.randint(-coef_bound, coef_bound)
        if coef:
            terms[exp] = terms.get(exp, 0) + coef
    return SparsePoly(nvars, {e: c for e, c in terms.items() if c})


def random_symmetric_poly(rng, nvars, max_part=2, nterms=3, coef_bound=5):
    """Random symmetric polynomial built from a random e-polynomial."""
    return from_elementary(random_poly(rng, nvars, max_part, nterms, coef_bound))


def random_homogeneous_symmetric(rng, nvars, degree, coef_bound=5):
    """Random homogeneous symmetric polynomial of the given total degree."""
    from nchilb.polynomial import monomial_symmetric

    partitions = [
        lam
        for lam in _partitions_of(degree)
        if len(lam) <= nvars
    ]
    total = SparsePoly.zero(nvars)
    for lam in partitions:
        total = total + rng.randint(-coef_bound, coef_bound) * monomial_symmetric(
            lam, nvars
        )
    return total


def _partitions_of(total, largest=None):
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions_of(total - part, part):
            yield (part,) + rest
