"""Shuffle-product algebra of the m-loop quiver and its kernel generators.

Degree-d elements are symmetric polynomials in d variables.  The product
of elements of arities p and q sums, over all complementary index pairs
(I, J) of {1,..,d}, the product of the factors evaluated at x_I and x_J
times the interaction kernel prod (x_j - x_i)^(m-1).  For m = 0 the kernel
exponent is -1; the sum is then accumulated as a single exact fraction
(running numerator and denominator) and divided out at the end, which is
guaranteed to be exact.

The same shuffle machinery produces the degree-d kernel generators
f * (e_q cup g), with f a Schur polynomial in the first p variables and
g = 1, which present the quotient rings downstream.
"""

import itertools
from dataclasses import dataclass

from .polynomial import (
    NonDivisibleError,
    SparsePoly,
    _embed,
    elementary_symmetric,
    exact_divide,
    is_symmetric,
    partitions_in_box,
    rho,
    schur,
)

__all__ = [
    "CohaElement",
    "coha_mul",
    "psi",
    "psi_product",
    "forbidden_polynomial",
    "tautological_relation",
    "shuffle_expression",
    "module_basis",
    "kernel_generators",
    "bidegree",
]


@dataclass(frozen=True)
class CohaElement:
    """An arity d >= 0 together with a symmetric polynomial in d variables."""

    d: int
    poly: SparsePoly

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("arity must be non-negative")
        if self.poly.nvars != self.d:
            raise ValueError(
                f"polynomial has {self.poly.nvars} variables, arity is {self.d}"
            )
        if not is_symmetric(self.poly):
            raise ValueError("polynomial is not symmetric")

    def to_json(self):
        from .polynomial import poly_to_json

        return {"d": self.d, "poly": poly_to_json(self.poly)}

    @classmethod
    def from_json(cls, obj):
        from .polynomial import poly_from_json

        poly, _ = poly_from_json(obj["poly"])
        return cls(obj["d"], poly)


def _kernel_factors(d, left, right):
    return [
        SparsePoly.variable(d, j) - SparsePoly.variable(d, i)
        for i in left
        for j in right
    ]


def _shuffle_sum(d, p, m, numerator_for):
    """Sum over complementary (I, J) of numerator_for(I, J) times the kernel.

    numerator_for returns a polynomial in d variables.  For m >= 1 the
    kernel power expands directly; for m = 0 each term carries denominator
    prod (x_j - x_i) and the whole sum is kept as one exact fraction whose
    final division must succeed.
    """
    q = d - p
    everything = set(range(d))
    if m >= 1:
        total = SparsePoly.zero(d)
        for left in itertools.combinations(range(d), p):
            right = tuple(sorted(everything - set(left)))
            term = numerator_for(left, right)
            if m > 1:
                for factor in _kernel_factors(d, left, right):
                    term = term * factor ** (m - 1)
            total = total + term
        return total
    numerator = SparsePoly.zero(d)
    denominator = SparsePoly.const(d, 1)
    for left in itertools.combinations(range(d), p):
        right = tuple(sorted(everything - set(left)))
        term_num = numerator_for(left, right)
        term_den = SparsePoly.const(d, 1)
        for factor in _kernel_factors(d, left, right):
            term_den = term_den * factor
        numerator = numerator * term_den + term_num * denominator
        denominator = denominator * term_den
    try:
        return exact_divide(numerator, denominator)
    except NonDivisibleError as exc:  # the theory forbids this
        raise ArithmeticError(
            "shuffle sum with negative kernel exponent is not a polynomial; "
            "this indicates a bug in the shuffle accumulation"
        ) from exc


def coha_mul(f, g, m):
    """Shuffle product of two elements, of arity f.d + g.d."""
    if m < 0:
        raise ValueError("loop count m must be non-negative")
    if f.d == 0:
        return CohaElement(g.d, g.poly * f.poly.constant())
    if g.d == 0:
        return CohaElement(f.d, f.poly * g.poly.constant())
    d = f.d + g.d

    def numerator_for(left, right):
        return _embed(f.poly, left, d) * _embed(g.poly, right, d)

    return CohaElement(d, _shuffle_sum(d, f.d, m, numerator_for))


def psi(k):
    """The arity-1 basis element x^k, of bidegree (1, -k)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return CohaElement(1, SparsePoly.monomial(1, (k,)))


def psi_product(ks, m):
    """Left-to-right shuffle product of psi_{k_1} * .. * psi_{k_r}."""
    ks = list(ks)
    if not ks:
        raise ValueError("psi_product needs at least one index")
    result = psi(ks[0])
    for k in ks[1:]:
        result = coha_mul(result, psi(k), m)
    return result


def forbidden_polynomial(p, d, m):
    """x_{p+1}..x_d times prod_{mu<=p<nu} (x_nu - x_mu)^m, in d variables."""
    if not 0 <= p < d:
        raise ValueError("need 0 <= p < d")
    poly = SparsePoly.const(d, 1)
    for j in range(p, d):
        poly = poly * SparsePoly.variable(d, j)
    for i in range(p):
        for j in range(p, d):
            poly = poly * (SparsePoly.variable(d, j) - SparsePoly.variable(d, i)) ** m
    return poly


def tautological_relation(b, p, d, m):
    """Antisymmetrization of b times the p-th forbidden polynomial."""
    if b.nvars != d:
        raise ValueError(f"b has {b.nvars} variables, expected {d}")
    return CohaElement(d, rho(b * forbidden_polynomial(p, d, m)))


def shuffle_expression(h, p, q, m):
    """The shuffle form of a block-invariant h: sum of h(x_I, x_J) x_J kernel^(m-1).

    This is the displayed expansion of the tautological relations; with
    h = rho_pq(b) it coincides with rho(b * f^(p)).
    """
    d = p + q
    if h.nvars != d:
        raise ValueError(f"h has {h.nvars} variables, expected {d}")

    def numerator_for(left, right):
        term = _embed(h, left + right, d)
        for j in right:
            term = term * SparsePoly.variable(d, j)
        return term

    return _shuffle_sum(d, p, m, numerator_for)


def module_basis(p, q):
    """Free-module basis of the block-invariants: Schur times one.

    Returns the binomial(p+q, p) polynomials s_lam(x_1,..,x_p), lam inside
    the p x q box, embedded into p+q variables.
    """
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    d = p + q
    return [
        _embed(schur(lam, p), tuple(range(p)), d) for lam in partitions_in_box(p, q)
    ]


def kernel_generators(d, m):
    """The 2^d - 1 products s_lam(x_1..x_p) * (e_q cup 1) for p < d, lam in a p x q box."""
    if d < 1:
        raise ValueError("d must be positive")
    gens = []
    for p in range(d):
        q = d - p
        e_top = CohaElement(q, elementary_symmetric(q, q))
        for lam in partitions_in_box(p, q):
            f = CohaElement(p, schur(lam, p))
            gens.append(coha_mul(f, e_top, m))
    return gens


def bidegree(f, m):
    """(d, k) with k = (m-1) d (d-1) / 2 minus the cohomological degree."""
    if f.poly.is_zero():
        raise ValueError("the zero element has no bidegree")
    if not f.poly.is_homogeneous():
        raise ValueError("element is not homogeneous")
    c = f.poly.degree()
    return (f.d, (m - 1) * f.d * (f.d - 1) // 2 - c)
