"""Binary quartic forms: invariants, real root counts, roots over F_q.

A `BinaryQuartic` stores (c0..c4) for c4 t^4 + c3 t^3 u + c2 t^2 u^2 +
c1 t u^3 + c0 u^4.  The discriminant normalization is fixed once and
for all as

    disc = (4 I^3 - J^2) / 27,
    I = 12 c4 c0 - 3 c3 c1 + c2^2,
    J = 72 c4 c2 c0 + 9 c3 c2 c1 - 27 c4 c1^2 - 27 c0 c3^2 - 2 c2^3,

which coincides with the classical polynomial discriminant (an integer
polynomial in the coefficients), so it is evaluated through its integral
expansion and works over any scalar ring, characteristic 3 included.
"""

from fractions import Fraction

from .errors import DegenerateLineError, HmsError
from .mpoly import SparsePoly, coeff_is_zero
from .scalars import Fq


def _universal_invariants():
    # symbols (a, b, c, d, e) = (c4, c3, c2, c1, c0)
    a, b, c, d, e = (SparsePoly.variable(i, 5, Fraction(1)) for i in range(5))
    I = 12 * (a * e) - 3 * (b * d) + c * c
    J = (
        72 * (a * c * e)
        + 9 * (b * c * d)
        - 27 * (a * d * d)
        - 27 * (e * b * b)
        - 2 * (c * c * c)
    )
    disc27 = 4 * I**3 - J * J
    disc_terms = {}
    for exp, coeff in disc27.terms.items():
        q = Fraction(coeff) / 27
        if q.denominator != 1:
            raise HmsError("discriminant expansion failed to be integral")
        disc_terms[exp] = int(q)
    return I, J, SparsePoly(5, disc_terms)


_I_POLY, _J_POLY, _DISC_POLY = _universal_invariants()


class BinaryQuartic:
    """Homogeneous binary quartic; degenerate means identically zero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != 5:
            raise HmsError("need exactly 5 coefficients c0..c4")
        self.coeffs = coeffs

    @staticmethod
    def from_sparse(f: SparsePoly) -> "BinaryQuartic":
        if f.nvars != 2:
            raise HmsError("not a binary form")
        if not f.is_zero and f.homogeneous_degree() != 4:
            raise HmsError("not homogeneous of degree 4")
        return BinaryQuartic([f.coefficient((i, 4 - i)) for i in range(5)])

    @property
    def is_degenerate(self) -> bool:
        return all(coeff_is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BinaryQuartic) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return f"BinaryQuartic(c0..c4 = {self.coeffs})"

    def _inv_args(self):
        c0, c1, c2, c3, c4 = self.coeffs
        return (c4, c3, c2, c1, c0)

    def invariant_I(self):
        return _I_POLY.evaluate(self._inv_args())

    def invariant_J(self):
        return _J_POLY.evaluate(self._inv_args())

    def discriminant(self):
        """(4 I^3 - J^2)/27 via its integral expansion; any scalar ring."""
        if self.is_degenerate:
            raise DegenerateLineError("discriminant of the zero form")
        return _DISC_POLY.evaluate(self._inv_args())

    def dehomogenized(self):
        """Coefficients of q(t, 1) low to high, trailing zeros stripped."""
        cs = list(self.coeffs)
        while cs and coeff_is_zero(cs[-1]):
            cs.pop()
        return cs

    def evaluate(self, t, u):
        c0, c1, c2, c3, c4 = self.coeffs
        return (
            c4 * t**4 + c3 * t**3 * u + c2 * t**2 * u**2 + c1 * t * u**3 + c0 * u**4
        )


# -- exact real root counting (Sturm) ---------------------------------


def _poly_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_rem(f, g):
    """Remainder of f by g over Fraction, f and g coefficient lists."""
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]
    while len(f) >= len(g) and f:
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        for i, c in enumerate(g):
            f[i + shift] -= factor * c
        f = _poly_trim(f)
        if not f:
            break
    return f


def sturm_chain(f):
    f = _poly_trim([Fraction(c) for c in f])
    if not f:
        return []
    chain = [f]
    if len(f) > 1:
        chain.append(_poly_trim([i * c for i, c in enumerate(f)][1:]))
    while len(chain[-1]) > 1:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for poly in chain:
        lead = poly[-1]
        deg = len(poly) - 1
        s = 1 if lead > 0 else -1
        if not positive and deg % 2 == 1:
            s = -s
        signs.append(s)
    variations = 0
    for a, b in zip(signs, signs[1:]):
        if a * b < 0:
            variations += 1
    return variations


def real_root_count(q: BinaryQuartic) -> int:
    """Number of distinct real projective roots of a squarefree quartic.

    Counts roots of q(t, 1) by a full Sturm sequence over Q on
    (-inf, +inf), plus the point [1:0] when the t^4 coefficient
    vanishes.  Precondition: disc(q) != 0 (checked).
    """
    if coeff_is_zero(q.discriminant()):
        raise HmsError("real_root_count requires a squarefree quartic")
    cs = q.dehomogenized()
    count = 0
    if len(cs) < 5:
        count += 1  # [1:0] is a (simple, by squarefreeness) real root
    if len(cs) > 1:
        chain = sturm_chain(cs)
        count += _sign_variations_at_inf(chain, False) - _sign_variations_at_inf(
            chain, True
        )
    return count


# -- roots over finite fields ------------------------------------------


def _to_field(c, field: Fq):
    from .scalars import CycloElt, FqElt

    if isinstance(c, FqElt):
        if c.field != field:
            raise HmsError("coefficient from a different finite field")
        return c
    if isinstance(c, CycloElt):
        return field.from_cyclo(c)
    return field.zero() + c


def _eval_list(cs, x, zero):
    val = zero
    for c in reversed(cs):
        val = val * x + c
    return val


def _deflate_linear(cs, root):
    """Divide the coefficient list by (t - root); remainder must vanish."""
    out = []
    acc = None
    for c in reversed(cs):
        acc = c if acc is None else acc * root + c
        out.append(acc)
    rem = out.pop()
    if not coeff_is_zero(rem):
        raise HmsError("not a root")
    return list(reversed(out))


def roots_over_Fq(q: BinaryQuartic, field: Fq):
    """All projective roots over F_q by exhaustive scan, with multiplicity.

    Returns a list of ((t, u), multiplicity) pairs; (t, u) is the
    canonical representative, u = 1 for affine roots and (1, 0) at
    infinity.  The scan caps the prime at 10^4 (the intended use is
    p in {3, 5}).
    """
    if field.p > 10**4:
        raise HmsError("prime too large for exhaustive scan")
    if q.is_degenerate:
        raise DegenerateLineError("roots of the zero form")
    coeffs = [_to_field(c, field) for c in q.coeffs]
    roots = []
    inf_mult = 0
    cs = list(coeffs)
    while cs and cs[-1].is_zero:
        cs.pop()
        inf_mult += 1
    if inf_mult:
        roots.append(((field.one(), field.zero()), inf_mult))
    zero, one = field.zero(), field.one()
    for x in field.elements():
        if not _eval_list(cs, x, zero).is_zero:
            continue
        mult = 0
        work = list(cs)
        while work and _eval_list(work, x, zero).is_zero:
            work = _deflate_linear(work, x)
            mult += 1
        roots.append(((x, one), mult))
    return roots
