"""Galois-type classification of binary quartics over Q.

The transitive labels (quartic irreducible over Q) are decided by the
resolvent cubic together with the square class of the discriminant and,
for the dihedral/cyclic split, reducibility of two auxiliary quadratics
over Q(sqrt(disc)).  Reducible quartics get C1/C2 when the splitting
field is trivial/quadratic and the label "reducible-composite"
otherwise.  All of these groups are solvable, which is what the
certificate machinery ultimately relies on.

`frobenius_cycle_type` samples the factorization pattern of the form at
a good odd prime; the multiset of patterns over many primes separates
the transitive labels and is used as an independent cross-check.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateLineError, HmsError
from .hensel import (
    deg,
    factor_binary_quartic,
    factor_squarefree_int,
    pdivmod,
    pgcd,
    pmod,
    ppowmod,
    pscale,
    psub,
)
from .mpoly import coeff_is_zero
from .quartics import BinaryQuartic
from .scalars import is_square_rational

GROUP_ORDERS = {"S4": 24, "A4": 12, "D4": 8, "C4": 4, "V4": 4, "C2": 2, "C1": 1}


@dataclass
class QuarticGaloisGroup:
    label: str
    order: int
    transitive: bool
    disc_is_square: bool
    factor_degrees: tuple


def resolvent_cubic(b, c, d, e):
    """Coefficients (low to high) of the resolvent cubic
    y^3 - c y^2 + (bd - 4e) y - (b^2 e - 4ce + d^2)
    of the monic quartic x^4 + b x^3 + c x^2 + d x + e.  Its roots are
    x1 x2 + x3 x4 and the two analogous pairings."""
    return [-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, 1]


def _rational_roots_monic_cubic(R):
    """Exact rational roots of a squarefree cubic with Fraction coeffs."""
    den = 1
    for c in R:
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in R]
    roots = []
    for fac in factor_squarefree_int(ints):
        if len(fac) == 2:
            roots.append(Fraction(-fac[0], fac[1]))
    return sorted(roots)


def _splits_over_sqrt_disc(delta, disc):
    """Does x^2 + ... with discriminant delta split over Q(sqrt(disc))?"""
    return (
        delta == 0
        or is_square_rational(delta)
        or is_square_rational(delta * disc)
    )


def _reducible_label(forms):
    degs = sorted(len(g) - 1 for g in forms)
    if degs == [1, 1, 1, 1]:
        return "C1", 1
    if degs == [1, 1, 2]:
        return "C2", 2
    if degs == [2, 2]:
        (a0, a1, a2), (b0, b1, b2) = forms[0], forms[1]
        d1 = Fraction(a1 * a1 - 4 * a0 * a2)
        d2 = Fraction(b1 * b1 - 4 * b0 * b2)
        if is_square_rational(d1 * d2):
            # both quadratics cut out the same field
            return "C2", 2
        return "reducible-composite", 4
    if degs == [1, 3]:
        cub = next(g for g in forms if len(g) == 4)
        c0, c1, c2, c3 = cub
        d3 = (
            18 * c3 * c2 * c1 * c0
            - 4 * c2**3 * c0
            + c2**2 * c1**2
            - 4 * c3 * c1**3
            - 27 * c3**2 * c0**2
        )
        order = 3 if is_square_rational(Fraction(d3)) else 6
        return "reducible-composite", order
    raise HmsError(f"unexpected factor degrees {degs}")


def quartic_galois_group(q: BinaryQuartic) -> QuarticGaloisGroup:
    """Galois group of the splitting field of a squarefree quartic."""
    disc = q.discriminant()
    if coeff_is_zero(disc):
        raise DegenerateLineError("quartic has a repeated projective root")
    disc = Fraction(disc)
    disc_sq = is_square_rational(disc)
    _, factors = factor_binary_quartic(q)
    degs = tuple(sorted(len(g) - 1 for g, _ in factors))
    if degs != (4,):
        label, order = _reducible_label([g for g, _ in factors])
        return QuarticGaloisGroup(label, order, False, disc_sq, degs)
    g = factors[0][0]
    lc = Fraction(g[4])
    b = Fraction(g[3]) / lc
    c = Fraction(g[2]) / lc
    d = Fraction(g[1]) / lc
    e = Fraction(g[0]) / lc
    roots = _rational_roots_monic_cubic(resolvent_cubic(b, c, d, e))
    if len(roots) == 0:
        label = "A4" if disc_sq else "S4"
    elif len(roots) == 3:
        label = "V4"
    else:
        beta = roots[0]
        # x^2 - beta x + e has roots x1 x2, x3 x4;
        # x^2 + b x + (c - beta) has roots x1 + x2, x3 + x4
        d1 = beta * beta - 4 * e
        d2 = b * b - 4 * (c - beta)
        if _splits_over_sqrt_disc(d1, disc) and _splits_over_sqrt_disc(d2, disc):
            label = "C4"
        else:
            label = "D4"
    return QuarticGaloisGroup(label, GROUP_ORDERS[label], True, disc_sq, degs)


@dataclass
class SolvabilityReport:
    factors: list  # (coeff tuple, label, order) per irreducible factor
    overall_label: str
    disc_is_square: bool
    solvable: bool
    splitting_degree_bound: int


def _factor_label(g):
    d = len(g) - 1
    if d == 1:
        return "C1", 1
    if d == 2:
        return "C2", 2
    if d == 3:
        c0, c1, c2, c3 = g
        d3 = (
            18 * c3 * c2 * c1 * c0
            - 4 * c2**3 * c0
            + c2**2 * c1**2
            - 4 * c3 * c1**3
            - 27 * c3**2 * c0**2
        )
        return ("C3", 3) if is_square_rational(Fraction(d3)) else ("S3", 6)
    grp = quartic_galois_group(BinaryQuartic(list(g)))
    return grp.label, grp.order


def solvability_report(q: BinaryQuartic) -> SolvabilityReport:
    """Factor q over Q and bound the splitting field by solvable pieces.

    Every group that can occur for a quartic is solvable, so the roots
    are always expressible by radicals; the report records the pieces
    and a degree bound for the compositum.
    """
    grp = quartic_galois_group(q)
    _, factors = factor_binary_quartic(q)
    rows = []
    bound = 1
    for g, _ in factors:
        label, order = _factor_label(g)
        rows.append((tuple(g), label, order))
        bound *= order
    return SolvabilityReport(rows, grp.label, grp.disc_is_square, True, bound)


def frobenius_cycle_type(q: BinaryQuartic, p: int) -> tuple:
    """Sorted orbit sizes of Frobenius on the projective roots of q mod p.

    p must be an odd prime not dividing the discriminant of the
    primitive integer model, so the four roots stay distinct mod p and
    the factor degrees of the reduced binary form are the orbit sizes.
    """
    from .hensel import _primitive_int_coeffs

    if p == 2:
        raise HmsError("odd primes only")
    ics = _primitive_int_coeffs(q)
    disc = BinaryQuartic([Fraction(c) for c in ics]).discriminant()
    if disc.denominator != 1:
        raise HmsError("integral model has non-integral discriminant")
    if int(disc) % p == 0:
        raise HmsError(f"{p} divides the discriminant")
    pattern = []
    affine = pmod(ics, p)
    inf_mult = 4 - deg(affine)
    pattern += [1] * inf_mult
    f = pscale(affine, pow(affine[-1], -1, p), p)
    if deg(f) >= 1:
        xp = ppowmod([0, 1], p, f, p)
        lin = pgcd(psub(xp, [0, 1], p), f, p)
        n1 = deg(lin)
        pattern += [1] * n1
        quo, rem = pdivmod(f, lin, p) if n1 > 0 else (f, [])
        assert not rem
        dc = deg(quo)
        if dc == 2:
            pattern.append(2)
        elif dc == 3:
            pattern.append(3)
        elif dc == 4:
            xp2 = ppowmod([0, 1], p * p, quo, p)
            pattern += [2, 2] if xp2 == [0, 1] else [4]
    return tuple(sorted(pattern))
