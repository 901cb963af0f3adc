"""Quotient presentations of the degree-d Chow rings for one framing root.

The degree-d kernel generators from the shuffle algebra are symmetric, so
they rewrite as polynomials in e_1,..,e_d with weight wt(e_i) = i.  A
reduced basis of the ideal they generate yields the ring presentation,
the Hilbert function by weighted degree, the standard-monomial basis, and
the verdicts tying everything back to the forest combinatorics: the
monomials indexed by B-tuples must form a quotient basis and the Hilbert
series must match the codimension generating polynomial of the forests.

Also here: the generic local multiplicity of a parametrized plane ideal,
computed as the minimal quotient dimension over random rational parameter
specializations.
"""

import random
from dataclasses import dataclass
from functools import lru_cache

from .coha import kernel_generators
from .forests import (
    ambient_dimension,
    enumerate_btuples,
    enumerate_forests,
    poincare_polynomial,
)
from .groebner import GroebnerBasis, buchberger, normal_form
from .polynomial import (
    SparsePoly,
    is_symmetric,
    poly_to_json,
    poly_to_text,
    to_elementary,
)
from .rationals import QQ

__all__ = [
    "kernel_ideal",
    "kernel_ideal_generators",
    "hilbert_function",
    "chern_monomial",
    "verify_chern_basis",
    "verify_poincare_match",
    "local_multiplicity",
    "minimal_generator_subset",
    "PresentationReport",
    "presentation_report",
]


def e_weights(d):
    return tuple(range(1, d + 1))


def kernel_ideal_generators(d, m):
    """Kernel generators rewritten in the e-variables, zeros dropped."""
    gens = []
    for element in kernel_generators(d, m):
        if element.poly.is_zero():
            continue
        if not is_symmetric(element.poly):
            raise AssertionError(
                "kernel generator is not symmetric; shuffle product is broken: "
                f"{poly_to_text(element.poly)}"
            )
        gens.append(to_elementary(element.poly))
    return gens


@lru_cache(maxsize=None)
def kernel_ideal(m, d):
    """Reduced basis of the ideal presenting the degree-d quotient ring."""
    if d < 1:
        raise ValueError("d must be positive")
    return buchberger(kernel_ideal_generators(d, m), e_weights(d))


def hilbert_function(gb, max_deg):
    """Quotient dimensions by weighted degree, 0..max_deg."""
    return gb.hilbert_function(max_deg)


def chern_monomial(b, d):
    """The e-monomial prod_k e_k^{b_{d-k}} attached to a B-tuple."""
    exp = tuple(b[d - k] for k in range(1, d + 1))
    return SparsePoly.monomial(d, exp)


def _independent_over_standard_monomials(polys, gb):
    """Exact rank check: do the normal forms span a space of full dimension?"""
    standard = gb.standard_monomials()
    index = {exp: i for i, exp in enumerate(standard)}
    rows = []
    for p in polys:
        nf = normal_form(p, gb)
        row = [QQ(0)] * len(standard)
        for exp, coef in nf.terms.items():
            row[index[exp]] = coef
        rows.append(row)
    # Gaussian elimination over the rationals
    rank = 0
    cols = len(standard)
    for col in range(cols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [c * inv for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank == len(polys)


def verify_chern_basis(m, d, gb=None):
    """Do the B-tuple monomials form a basis of the quotient ring?

    True when their normal forms are linearly independent and their number
    equals the quotient dimension.
    """
    if gb is None:
        gb = kernel_ideal(m, d)
    if not gb.is_finite_dimensional():
        return False
    btuples = enumerate_btuples(m, d, 1)
    monomials = [chern_monomial(b, d) for b in btuples]
    if len(monomials) != gb.quotient_dimension():
        return False
    return _independent_over_standard_monomials(monomials, gb)


def verify_poincare_match(m, d, gb=None):
    """Hilbert function of the quotient against the forest codimension census."""
    if gb is None:
        gb = kernel_ideal(m, d)
    max_deg = max(ambient_dimension(m, d, 1), 0)
    hilbert = gb.hilbert_function(max_deg)
    census = poincare_polynomial(m, d, 1, by="codim")
    census = census + [0] * (max_deg + 1 - len(census))
    return hilbert == census[: max_deg + 1]


def local_multiplicity(polys, trials=5, seed=0, local_vars=2):
    """Generic quotient dimension of a parametrized ideal in the local variables.

    The first `local_vars` variables are kept; the remaining ones are
    parameters, specialized to random integers in [-100, 100] that keep
    every leading coefficient nonzero.  Each trial computes the dimension
    of the specialized quotient; the minimum over trials is the generic
    value by semicontinuity.  Raises if no trial is finite-dimensional.
    """
    if not polys:
        raise ValueError("need at least one polynomial")
    nvars = polys[0].nvars
    if any(p.nvars != nvars for p in polys):
        raise ValueError("polynomials disagree on variable count")
    if nvars < local_vars:
        raise ValueError(f"need at least {local_vars} variables")
    n_params = nvars - local_vars

    leading_coefs = [_leading_local_coefficient(p, local_vars) for p in polys]
    rng = random.Random(seed)
    dimensions = []
    for _ in range(trials):
        for _attempt in range(1000):
            values = [QQ(rng.randint(-100, 100)) for _ in range(n_params)]
            if all(_eval_params(c, values) for c in leading_coefs):
                break
        else:
            continue
        specialized = [_specialize(p, local_vars, values) for p in polys]
        specialized = [p for p in specialized if not p.is_zero()]
        if not specialized:
            continue
        gb = buchberger(specialized, (1,) * local_vars)
        if gb.is_finite_dimensional():
            dimensions.append(gb.quotient_dimension())
    if not dimensions:
        raise RuntimeError(
            "every specialization produced an infinite-dimensional quotient"
        )
    return min(dimensions)


def _leading_local_coefficient(poly, local_vars):
    """Coefficient (in the parameters) of the graded-lex-leading local monomial."""
    if poly.is_zero():
        raise ValueError("zero polynomial has no leading coefficient")
    by_local = {}
    for exp, coef in poly.terms.items():
        local = exp[:local_vars]
        by_local.setdefault(local, {})[exp[local_vars:]] = coef
    lead = max(by_local, key=lambda e: (sum(e), e))
    return by_local[lead]


def _eval_params(coef_terms, values):
    total = QQ(0)
    for exp, coef in coef_terms.items():
        term = coef
        for v, a in zip(values, exp):
            term *= v**a
        total += term
    return total


def _specialize(poly, local_vars, values):
    terms = {}
    for exp, coef in poly.terms.items():
        factor = coef
        for v, a in zip(values, exp[local_vars:]):
            factor *= v**a
        local = exp[:local_vars]
        acc = terms.get(local, QQ(0)) + factor
        if acc:
            terms[local] = acc
        else:
            terms.pop(local, None)
    return SparsePoly._make(local_vars, terms)


def minimal_generator_subset(gens, weights):
    """Greedy inclusion-minimal subset generating the same ideal.

    Drops generators in order whenever the remaining ones still generate
    the dropped element; minimal only in the inclusion sense.
    """
    current = list(gens)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(current):
            rest = current[:i] + current[i + 1 :]
            if not rest:
                continue
            if buchberger(rest, weights).contains(g):
                current = rest
                changed = True
                break
    return current


@dataclass(frozen=True)
class PresentationReport:
    """Everything the presentation pipeline knows about one (m, d)."""

    m: int
    d: int
    generators: tuple
    groebner: GroebnerBasis
    hilbert: tuple
    standard_monomials: tuple
    verdicts: dict
    minimal_generators: tuple = None

    def to_json(self):
        data = {
            "m": self.m,
            "d": self.d,
            "generators": [poly_to_text(g, names="e") for g in self.generators],
            "groebner": [poly_to_text(g, names="e") for g in self.groebner.polys],
            "hilbert": list(self.hilbert),
            "standard_monomials": [
                poly_to_text(SparsePoly.monomial(self.d, exp), names="e")
                for exp in self.standard_monomials
            ],
            "verdicts": dict(self.verdicts),
        }
        if self.minimal_generators is not None:
            data["minimal_generators"] = [
                poly_to_text(g, names="e") for g in self.minimal_generators
            ]
        return data


def presentation_report(m, d, minimal=False):
    """Run the whole presentation pipeline for one (m, d) with n = 1."""
    gens = kernel_ideal_generators(d, m)
    gb = kernel_ideal(m, d)
    max_deg = max(ambient_dimension(m, d, 1), 0)
    hilbert = tuple(gb.hilbert_function(max_deg))
    standard = tuple(gb.standard_monomials()) if gb.is_finite_dimensional() else ()
    verdicts = {
        "chern_basis": verify_chern_basis(m, d, gb),
        "poincare_match": verify_poincare_match(m, d, gb),
    }
    minimal_gens = (
        tuple(minimal_generator_subset(gens, e_weights(d))) if minimal else None
    )
    return PresentationReport(
        m=m,
        d=d,
        generators=tuple(gens),
        groebner=gb,
        hilbert=hilbert,
        standard_monomials=standard,
        verdicts=verdicts,
        minimal_generators=minimal_gens,
    )
