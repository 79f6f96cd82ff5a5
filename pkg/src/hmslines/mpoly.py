"""Sparse multivariate polynomials over any exact scalar ring.

Terms are stored as a dict from exponent tuples to nonzero coefficients.
Coefficients may be int, Fraction, CycloElt, FqElt, PadicApprox, UElt or
even SparsePoly again (polynomial coefficients are used by the symbolic
line-family checks); all that is required of the scalar is +, -, * and a
zero test.

Canonical term order everywhere (printing, serialization) is graded
lexicographic, highest first.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import HmsError


def coeff_is_zero(c) -> bool:
    if isinstance(c, SparsePoly):
        return c.is_zero
    z = getattr(c, "is_zero", None)
    if z is not None:
        return z
    return c == 0


def _glex_key(exp):
    return (sum(exp), exp)


class SparsePoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                if coeff_is_zero(c):
                    continue
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise HmsError("exponent arity mismatch")
                clean[exp] = c
        self.terms = clean

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "SparsePoly":
        return SparsePoly(nvars, {})

    @staticmethod
    def constant(c, nvars: int) -> "SparsePoly":
        return SparsePoly(nvars, {tuple([0] * nvars): c})

    @staticmethod
    def variable(i: int, nvars: int, one=1) -> "SparsePoly":
        exp = [0] * nvars
        exp[i] = 1
        return SparsePoly(nvars, {tuple(exp): one})

    # -- ring structure ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise HmsError("nvars mismatch")
            return other
        return SparsePoly.constant(other, self.nvars)

    def __add__(self, other):
        o = self._coerce(other)
        terms = dict(self.terms)
        for exp, c in o.terms.items():
            if exp in terms:
                s = terms[exp] + c
                if coeff_is_zero(s):
                    del terms[exp]
                else:
                    terms[exp] = s
            else:
                terms[exp] = c
        out = SparsePoly.__new__(SparsePoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return SparsePoly(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        o = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if exp in terms:
                    prod = terms[exp] + prod
                if coeff_is_zero(prod):
                    terms.pop(exp, None)
                else:
                    terms[exp] = prod
        return SparsePoly(self.nvars, terms)

    def __rmul__(self, other):
        return SparsePoly(self.nvars, {e: other * c for e, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise HmsError("negative polynomial power")
        result = SparsePoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if coeff_is_zero(other):
            return self.is_zero
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self):
        """Degree if homogeneous (zero poly counts), else raises."""
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise HmsError("not homogeneous")
        return degs.pop() if degs else None

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def sorted_terms(self):
        """Terms in graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)

    # -- operations ---------------------------------------------------

    def evaluate(self, values):
        if len(values) != self.nvars:
            raise HmsError("value arity mismatch")
        pow_cache = [{0: 1} for _ in range(self.nvars)]
        result = None
        for exp, c in self.sorted_terms():
            term = c
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                cache = pow_cache[i]
                if e not in cache:
                    pe = values[i]
                    for _ in range(e - 1):
                        pe = pe * values[i]
                    cache[e] = pe
                term = term * cache[e]
            result = term if result is None else result + term
        if result is None:
            return 0
        return result

    def substitute(self, images):
        """Map variable i to the polynomial images[i] (all in common arity)."""
        if len(images) != self.nvars:
            raise HmsError("substitution arity mismatch")
        nv = images[0].nvars
        pow_cache = [{} for _ in range(self.nvars)]
        result = SparsePoly.zero(nv)
        for exp, c in self.terms.items():
            term = SparsePoly.constant(c, nv)
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                cache = pow_cache[i]
                if e not in cache:
                    cache[e] = images[i] ** e
                term = term * cache[e]
            result = result + term
        return result

    def derivative(self, i: int):
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            ne = list(exp)
            ne[i] -= 1
            terms[tuple(ne)] = c * exp[i]
        return SparsePoly(self.nvars, terms)

    def map_coeffs(self, fn):
        return SparsePoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # -- normalization over Q -----------------------------------------

    def canonical(self):
        """(scale, poly) with self = scale * poly, poly integral, content 1,
        and the graded-lex leading coefficient positive.

        Coefficients must be Fraction/int.  The zero polynomial returns
        (1, self).
        """
        if not self.terms:
            return Fraction(1), self
        coeffs = [Fraction(c) for c in self.terms.values()]
        den_lcm = 1
        for c in coeffs:
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        num_gcd = 0
        for c in coeffs:
            num_gcd = gcd(num_gcd, c.numerator * (den_lcm // c.denominator))
        scale = Fraction(num_gcd, den_lcm)
        lead = self.sorted_terms()[0][1]
        if lead < 0:
            scale = -scale
        inv = 1 / scale
        return scale, SparsePoly(
            self.nvars, {e: Fraction(c) * inv for e, c in self.terms.items()}
        )

    # -- display -------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "SparsePoly(0)"
        bits = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e > 0
            )
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def elementary_symmetric(k: int, nvars: int = 6) -> SparsePoly:
    """sigma_k in nvars variables, coefficients Fraction(1)."""
    if not 0 <= k <= nvars:
        raise HmsError("k out of range")
    if k == 0:
        return SparsePoly.constant(Fraction(1), nvars)
    terms = {}
    for combo in combinations(range(nvars), k):
        exp = [0] * nvars
        for i in combo:
            exp[i] = 1
        terms[tuple(exp)] = Fraction(1)
    return SparsePoly(nvars, terms)


def restrict_to_basis(f: SparsePoly, P, Q) -> SparsePoly:
    """f composed with the line map (t, u) -> t*P + u*Q; a binary form.

    P and Q are coordinate sequences of length f.nvars over any scalar
    ring (including polynomial coefficients for symbolic checks).
    """
    if len(P) != f.nvars or len(Q) != f.nvars:
        raise HmsError("basis arity mismatch")
    images = []
    for a, b in zip(P, Q):
        images.append(SparsePoly(2, {(1, 0): a, (0, 1): b}))
    return f.substitute(images)


def compose_linear(f: SparsePoly, matrix) -> SparsePoly:
    """f(M x): variable i of f is replaced by sum_j matrix[i][j] * x_j."""
    n = f.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise HmsError("matrix shape mismatch")
    images = []
    for row in matrix:
        terms = {}
        for j, c in enumerate(row):
            if coeff_is_zero(c):
                continue
            exp = [0] * n
            exp[j] = 1
            terms[tuple(exp)] = c
        images.append(SparsePoly(n, terms))
    return f.substitute(images)
