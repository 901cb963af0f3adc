"""Exact sparse multivariate polynomial arithmetic and symmetric functions.

Polynomials are stored sparsely as a map from exponent vectors to nonzero
rational coefficients.  On top of the ring operations this module provides
the symmetric-function toolbox used everywhere else: elementary and
monomial symmetric polynomials, Schur polynomials via the bialternant,
antisymmetrization against the Vandermonde discriminant (both for the full
symmetric group and for a two-block Young subgroup), and the change of
basis from symmetric polynomials in x-variables to polynomials in the
elementary symmetric generators.
"""

import itertools
import re
from functools import lru_cache

from .rationals import QQ, rational_from_string

__all__ = [
    "SparsePoly",
    "NonDivisibleError",
    "exact_divide",
    "elementary_symmetric",
    "monomial_symmetric",
    "schur",
    "discriminant",
    "antisymmetrize",
    "rho",
    "rho_pq",
    "is_symmetric",
    "to_elementary",
    "from_elementary",
    "is_partition",
    "partitions_in_box",
    "poly_to_text",
    "poly_from_text",
    "poly_to_json",
    "poly_from_json",
]

_ZERO = QQ(0)
_ONE = QQ(1)


class NonDivisibleError(ArithmeticError):
    """Raised by exact_divide when the divisor does not divide the dividend."""


class SparsePoly:
    """Sparse polynomial with exact rational coefficients.

    `terms` maps exponent tuples of length `nvars` to nonzero rationals, e.g.
    x1^2*x2 - 3/2 in two variables is SparsePoly(2, {(2, 1): 1, (0, 0): -3/2}).
    Instances are value-like: never mutated after construction, hashable,
    and safe to share between threads.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        clean = {}
        if terms:
            for exp, coef in terms.items():
                if len(exp) != nvars:
                    raise ValueError(
                        f"exponent vector {exp} has length {len(exp)}, expected {nvars}"
                    )
                coef = QQ(coef)
                if coef:
                    clean[tuple(exp)] = coef
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _make(cls, nvars, terms):
        # internal fast path: terms is a fresh dict, zero coefficients allowed
        self = object.__new__(cls)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if c})
        return self

    @classmethod
    def zero(cls, nvars):
        return cls._make(nvars, {})

    @classmethod
    def const(cls, nvars, value):
        return cls._make(nvars, {(0,) * nvars: QQ(value)})

    @classmethod
    def monomial(cls, nvars, exp, coef=1):
        return cls(nvars, {tuple(exp): coef})

    @classmethod
    def variable(cls, nvars, index):
        """The variable x_{index+1} (0-based index)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[index] = 1
        return cls._make(nvars, {tuple(exp): _ONE})

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}"
                )
            return other
        return SparsePoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            acc = terms.get(exp)
            if acc is None:
                terms[exp] = coef
            else:
                acc = acc + coef
                if acc:
                    terms[exp] = acc
                else:
                    del terms[exp]
        result = object.__new__(SparsePoly)
        object.__setattr__(result, "nvars", self.nvars)
        object.__setattr__(result, "terms", terms)
        return result

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._make(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            coef = QQ(other)
            if not coef:
                return SparsePoly.zero(self.nvars)
            return SparsePoly._make(
                self.nvars, {e: c * coef for e, c in self.terms.items()}
            )
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if len(self.terms) > len(other.terms):
            self, other = other, self
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exp)
                terms[exp] = c1 * c2 if acc is None else acc + c1 * c2
        return SparsePoly._make(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = SparsePoly.const(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degree(self, weights):
        """Max weighted degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(w * a for w, a in zip(weights, e)) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def constant(self):
        """Coefficient of the constant term."""
        return self.terms.get((0,) * self.nvars, _ZERO)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), _ZERO)

    def permute(self, sigma):
        """Apply x_i -> x_{sigma(i)} where sigma is a 0-based image tuple."""
        terms = {}
        for exp, coef in self.terms.items():
            new = [0] * self.nvars
            for i, a in enumerate(exp):
                new[sigma[i]] = a
            terms[tuple(new)] = coef
        return SparsePoly._make(self.nvars, terms)

    def evaluate(self, values):
        """Substitute values[i] (a polynomial or rational) for x_{i+1}.

        All polynomial values must share one variable count, which becomes
        the variable count of the result.
        """
        if len(values) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        target = None
        for v in values:
            if isinstance(v, SparsePoly):
                if target is None:
                    target = v.nvars
                elif v.nvars != target:
                    raise ValueError("substitution values disagree on variable count")
        if target is None:
            target = 0
        consts = [
            v if isinstance(v, SparsePoly) else SparsePoly.const(target, v)
            for v in values
        ]
        powers = [{0: SparsePoly.const(target, 1)} for _ in range(self.nvars)]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * consts[i]
            return cache[k]

        total = SparsePoly.zero(target)
        for exp, coef in self.terms.items():
            term = SparsePoly.const(target, coef)
            for i, a in enumerate(exp):
                if a:
                    term = term * power(i, a)
            total = total + term
        return total

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {poly_to_text(self)!r})"

    def __str__(self):
        return poly_to_text(self)


def _lex_lead(poly):
    return max(poly.terms)


def exact_divide(a, b):
    """Quotient a / b when b divides a exactly; raises NonDivisibleError otherwise."""
    if not isinstance(a, SparsePoly) or not isinstance(b, SparsePoly):
        raise TypeError("exact_divide expects polynomials")
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if b.is_zero():
        raise NonDivisibleError("division by the zero polynomial")
    if a.is_zero():
        return a
    lead_b = _lex_lead(b)
    coef_b = b.terms[lead_b]
    quotient = {}
    rest = dict(a.terms)
    while rest:
        lead = max(rest)
        diff = tuple(x - y for x, y in zip(lead, lead_b))
        if any(d < 0 for d in diff):
            raise NonDivisibleError(f"{poly_to_text(b)} does not divide {poly_to_text(a)}")
        q = rest[lead] / coef_b
        quotient[diff] = q
        for exp, coef in b.terms.items():
            target = tuple(d + e for d, e in zip(diff, exp))
            acc = rest.get(target, _ZERO) - q * coef
            if acc:
                rest[target] = acc
            else:
                rest.pop(target, None)
    return SparsePoly._make(a.nvars, quotient)


# ---------------------------------------------------------------------------
# symmetric-function constructors


@lru_cache(maxsize=None)
def elementary_symmetric(k, d):
    """e_k in d variables; e_0 = 1, and by convention zero for k > d."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > d:
        return SparsePoly.zero(d)
    terms = {}
    for subset in itertools.combinations(range(d), k):
        exp = [0] * d
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = _ONE
    return SparsePoly._make(d, terms)


def monomial_symmetric(lam, d):
    """Sum of the distinct monomials whose exponent multiset is the partition lam."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    lam = tuple(part for part in lam if part)
    if len(lam) > d:
        raise ValueError(f"partition {lam} has more than {d} parts")
    padded = lam + (0,) * (d - len(lam))
    terms = {exp: _ONE for exp in set(itertools.permutations(padded))}
    return SparsePoly._make(d, terms)


@lru_cache(maxsize=None)
def discriminant(d):
    """The Vandermonde product of (x_j - x_i) over i < j; 1 for d <= 1."""
    poly = SparsePoly.const(d, 1)
    for i in range(d):
        for j in range(i + 1, d):
            poly = poly * (SparsePoly.variable(d, j) - SparsePoly.variable(d, i))
    return poly


@lru_cache(maxsize=None)
def _signed_permutations(d):
    perms = []
    for sigma in itertools.permutations(range(d)):
        inversions = sum(
            1
            for i in range(d)
            for j in range(i + 1, d)
            if sigma[i] > sigma[j]
        )
        perms.append((sigma, -1 if inversions & 1 else 1))
    return tuple(perms)


def antisymmetrize(f):
    """Signed sum of f over all permutations of its variables."""
    total = SparsePoly.zero(f.nvars)
    for sigma, sign in _signed_permutations(f.nvars):
        image = f.permute(sigma)
        total = total + (image if sign > 0 else -image)
    return total


def rho(f):
    """Antisymmetrize f and divide by the discriminant.

    The result is a symmetric polynomial; the division is always exact
    because the signed sum is alternating.
    """
    if f.nvars <= 1:
        return f
    return exact_divide(antisymmetrize(f), discriminant(f.nvars))


def rho_pq(f, p, q):
    """Block antisymmetrization over S_p x S_q acting on x_1..x_p and x_{p+1}..x_d."""
    d = p + q
    if f.nvars != d:
        raise ValueError(f"polynomial has {f.nvars} variables, expected {d}")
    total = SparsePoly.zero(d)
    for left, sign_l in _signed_permutations(p):
        for right, sign_r in _signed_permutations(q):
            sigma = left + tuple(p + i for i in right)
            image = f.permute(sigma)
            total = total + (image if sign_l * sign_r > 0 else -image)
    block_disc = _embed(discriminant(p), tuple(range(p)), d) * _embed(
        discriminant(q), tuple(range(p, d)), d
    )
    return exact_divide(total, block_disc)


def _embed(poly, positions, nvars):
    """Reinterpret poly(x_1..x_k) with variable i placed at positions[i]."""
    terms = {}
    for exp, coef in poly.terms.items():
        new = [0] * nvars
        for i, a in enumerate(exp):
            new[positions[i]] = a
        terms[tuple(new)] = coef
    return SparsePoly._make(nvars, terms)


def _adjacent_transposition(d, i):
    sigma = list(range(d))
    sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
    return tuple(sigma)


def is_symmetric(f, block=None):
    """Invariance of f under a permutation group of its variables.

    block=None checks the full symmetric group; block=(p, q) checks the
    Young subgroup permuting x_1..x_p and x_{p+1}..x_{p+q} separately.
    Only adjacent transpositions are tested, which generate the group.
    """
    d = f.nvars
    if block is None:
        ranges = [(0, d)]
    else:
        p, q = block
        if p + q != d:
            raise ValueError(f"block ({p},{q}) does not cover {d} variables")
        ranges = [(0, p), (p, p + q)]
    for lo, hi in ranges:
        for i in range(lo, hi - 1):
            if f.permute(_adjacent_transposition(d, i)) != f:
                return False
    return True


def schur(lam, d):
    """Schur polynomial s_lam in d variables via the bialternant ratio.

    The numerator is the antisymmetrization of the staircase-shifted
    monomial and the denominator is the discriminant, so the division is
    exact and the normalization follows prod_{i<j}(x_j - x_i).
    """
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    lam = tuple(part for part in lam if part)
    if len(lam) > d:
        raise ValueError(f"partition {lam} has more than {d} parts")
    if d == 0:
        return SparsePoly.const(0, 1)
    padded = lam + (0,) * (d - len(lam))
    # exponent of x_{j+1} is lam_{d-j} + j: the staircase grows toward x_d
    exp = tuple(padded[d - 1 - j] + j for j in range(d))
    return rho(SparsePoly.monomial(d, exp))


def is_partition(lam):
    lam = tuple(lam)
    return all(
        isinstance(part, int) and part >= 0 for part in lam
    ) and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def partitions_in_box(rows, cols):
    """All partitions with at most `rows` parts, each at most `cols`.

    Emitted in increasing lexicographic order of the padded part vector,
    starting with the empty partition; there are binomial(rows+cols, rows)
    of them.
    """
    out = []

    def gen(prefix):
        out.append(prefix)
        if len(prefix) == rows:
            return
        limit = prefix[-1] if prefix else cols
        for part in range(1, limit + 1):
            gen(prefix + (part,))

    gen(())
    return sorted(out, key=lambda lam: lam + (0,) * (rows - len(lam)))


# ---------------------------------------------------------------------------
# change of basis to elementary symmetric coordinates


def to_elementary(f):
    """Rewrite a symmetric polynomial as a polynomial in e_1, .., e_d.

    Classical descent: repeatedly subtract the e-monomial whose expansion
    has the same lex-leading term.  Terminates with the unique preimage;
    raises ValueError when f is not symmetric (detected by a lex-leading
    exponent that fails to be weakly decreasing).
    """
    d = f.nvars
    remainder = f
    result = {}
    while remainder.terms:
        lead = max(remainder.terms)
        if any(lead[i] < lead[i + 1] for i in range(d - 1)):
            raise ValueError("polynomial is not symmetric")
        coef = remainder.terms[lead]
        e_exp = tuple(
            lead[i] - (lead[i + 1] if i + 1 < d else 0) for i in range(d)
        )
        result[e_exp] = coef
        expansion = SparsePoly.const(d, 1)
        for i, a in enumerate(e_exp):
            if a:
                expansion = expansion * elementary_symmetric(i + 1, d) ** a
        remainder = remainder - coef * expansion
    return SparsePoly._make(d, result)


def from_elementary(g, d=None):
    """Evaluate a polynomial in e-variables at the elementary symmetric polynomials."""
    if d is None:
        d = g.nvars
    if g.nvars != d:
        raise ValueError(f"polynomial has {g.nvars} variables, expected {d}")
    return g.evaluate([elementary_symmetric(i + 1, d) for i in range(d)])


# ---------------------------------------------------------------------------
# text and JSON codecs


def _term_sort_key(item):
    exp, _ = item
    return (sum(exp), exp)


def poly_to_text(f, names="x"):
    """Canonical text form: graded-lex descending terms, explicit coefficients."""
    if not f.terms:
        return "0"
    pieces = []
    for exp, coef in sorted(f.terms.items(), key=_term_sort_key, reverse=True):
        body = str(coef if coef > 0 else -coef)
        for i, a in enumerate(exp):
            if a == 0:
                continue
            body += f"*{names}{i + 1}"
            if a > 1:
                body += f"^{a}"
        if not pieces:
            pieces.append(body if coef > 0 else "-" + body)
        else:
            pieces.append((" + " if coef > 0 else " - ") + body)
    return "".join(pieces)


_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)(?P<factors>(?:\*[a-z]\d+(?:\^\d+)?)*)$"
)
_FACTOR_RE = re.compile(r"\*([a-z])(\d+)(?:\^(\d+))?")


def poly_from_text(s, nvars=None):
    """Parse the canonical text grammar; infers the variable count if not given."""
    s = s.strip()
    if s == "0":
        return SparsePoly.zero(nvars or 0)
    chunks = []
    sign = 1
    if s.startswith("-"):
        sign = -1
        s = s[1:]
    for piece in re.split(r" ([+-]) ", s):
        chunks.append(piece)
    terms = []
    current_sign = sign
    name = None
    for i, piece in enumerate(chunks):
        if i % 2 == 1:
            current_sign = 1 if piece == "+" else -1
            continue
        match = _TERM_RE.match(piece)
        if not match:
            raise ValueError(f"cannot parse polynomial term {piece!r}")
        coef = rational_from_string(match.group("coef")) * current_sign
        factors = {}
        for fmatch in _FACTOR_RE.finditer(match.group("factors")):
            letter, index, power = fmatch.group(1), int(fmatch.group(2)), fmatch.group(3)
            if name is None:
                name = letter
            elif letter != name:
                raise ValueError("mixed variable families in one polynomial")
            if index < 1:
                raise ValueError(f"variable index {index} out of range")
            factors[index - 1] = factors.get(index - 1, 0) + (int(power) if power else 1)
        terms.append((coef, factors))
    width = nvars
    if width is None:
        width = max((max(f) + 1 for _, f in terms if f), default=0)
    acc = {}
    for coef, factors in terms:
        if factors and max(factors) >= width:
            raise ValueError(f"variable index exceeds {width} variables")
        exp = tuple(factors.get(i, 0) for i in range(width))
        acc[exp] = acc.get(exp, _ZERO) + coef
    return SparsePoly._make(width, acc)


def poly_to_json(f, basis="x"):
    """JSON object for a polynomial; terms in canonical order, coefficients as strings."""
    return {
        "vars": f.nvars,
        "basis": basis,
        "terms": [
            {"coef": str(coef), "exp": list(exp)}
            for exp, coef in sorted(f.terms.items(), key=_term_sort_key, reverse=True)
        ],
    }


def poly_from_json(obj):
    """Inverse of poly_to_json; returns (polynomial, basis)."""
    nvars = obj["vars"]
    terms = {}
    for term in obj["terms"]:
        exp = tuple(term["exp"])
        terms[exp] = terms.get(exp, _ZERO) + rational_from_string(term["coef"])
    return SparsePoly._make(nvars, terms), obj.get("basis", "x")
