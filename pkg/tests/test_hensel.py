from fractions import Fraction

import pytest

from hmslines.errors import PrecisionError
from hmslines.hensel import (
    factor_monic_mod_p,
    hensel_factor_quartic,
    hensel_pair_lift,
    newton_lift_root,
    peval,
    pmod,
    pmul,
)
from hmslines.lines import labc_line, quartic_of_line, Line
from hmslines.quartics import BinaryQuartic
from hmslines.search import build_model, parse_config
from hmslines.surface import char3_twist, rho0_twist, twisted_equations


def Q(coeffs):
    return BinaryQuartic([Fraction(c) for c in coeffs])


def char3_model():
    return twisted_equations(char3_twist(1, 1))


def test_factor_monic_mod_p_recombines():
    # x^4 + 1 mod 3 factors as two irreducible quadratics
    f = [1, 0, 0, 0, 1]
    factors = factor_monic_mod_p(f, 3)
    assert sorted(len(g) - 1 for g, _ in factors) == [2, 2]
    prod = [1]
    for g, mult in factors:
        for _ in range(mult):
            prod = pmul(prod, g, 3)
    assert pmod(prod, 3) == pmod(f, 3)


def test_newton_lift_root_residual():
    # root of x^2 - 2 mod 7 lifted to high precision
    r = newton_lift_root([-2, 0, 1], 3, 7, 10)
    assert (r * r - 2) % 7**10 == 0


def test_hensel_pair_lift_residual():
    # x^4 + 1 = (x^2 + x + 2)(x^2 - x + 2) mod 3
    f = [1, 0, 0, 0, 1]
    g0 = [2, 1, 1]
    h0 = [2, -1, 1]
    g, h = hensel_pair_lift(f, g0, h0, 3, 8)
    prod = pmul(g, h, 3**8)
    assert pmod(prod, 3**8) == pmod(f, 3**8)


def test_worked_example_unramified_at_3():
    # the line with chart parameters (3, 243, 243) splits unramified
    # over Z_3: a double residue root that separates, plus an inert
    # quadratic point
    model = char3_model()
    line = labc_line(3, 243, 243)
    q = quartic_of_line(line, model)
    rep = hensel_factor_quartic(q, 3, 12)
    assert rep.verdict == "unramified"
    assert rep.squarefree_mod_p is False
    assert tuple(sorted(rep.residue_degrees)) == (1, 1, 2)
    kinds = sorted(
        (b.degree, b.residue_degree, b.multiplicity, b.verdict)
        for b in rep.blocks
    )
    assert kinds == [
        (2, 1, 2, "unramified"),
        (2, 2, 1, "unramified"),
    ]
    double = [b for b in rep.blocks if b.multiplicity == 2][0]
    assert double.disc_valuation == 4


def test_worked_example_squarefree_at_5():
    model = char3_model()
    line = labc_line(3, 243, 243)
    q = quartic_of_line(line, model)
    rep = hensel_factor_quartic(q, 5, 12)
    assert rep.verdict == "unramified"
    assert rep.squarefree_mod_p is True
    assert tuple(sorted(rep.residue_degrees)) == (2, 2)


def test_worked_example_inconclusive_for_archimedean_line():
    # the real-place line's quartic reduces to a linear factor times
    # the cube of a linear factor at both 3 and 5, which the sound
    # verdict scheme must leave inconclusive
    model = twisted_equations(rho0_twist())
    rows = [
        [1, 0, Fraction(-3, 4), Fraction(3, 4), 0, Fraction(-1, 2)],
        [0, 1, Fraction(-23, 20), Fraction(7, 20), 2, Fraction(3, 10)],
    ]
    q = quartic_of_line(Line(rows), model)
    for p in (3, 5):
        rep = hensel_factor_quartic(q, p, 12)
        assert rep.verdict == "inconclusive"
        mults = sorted(b.multiplicity for b in rep.blocks)
        assert mults == [1, 3]


def test_lifted_roots_satisfy_the_quartic():
    model = char3_model()
    line = labc_line(3, 243, 243)
    q = quartic_of_line(line, model)
    # primitive integer coefficients of the quartic
    den = 1
    for c in q.coeffs:
        c = Fraction(c)
        den = den * c.denominator // __import__("math").gcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in q.coeffs]
    for p in (3, 5):
        rep = hensel_factor_quartic(q, p, 10)
        m = p**10
        for blk in rep.blocks:
            if blk.lifted_root is None:
                continue
            t, u = blk.lifted_root
            acc = sum(c * pow(t, i, m) * pow(u, 4 - i, m) for i, c in enumerate(ints))
            assert acc % m == 0


def test_ramified_example_detected():
    # (t^2 - 3u^2)(t^2 + t u + u^2): both factors have odd-valuation
    # discriminant at 3, so the splitting field is ramified
    q = Q([3, 3, 4, 1, 1])
    # oracle for the construction: (t^2 - 3u^2)(t^2 + tu + u^2)
    # = t^4 + t^3 u + t^2 u^2 - 3t^2u^2 - 3tu^3 - 3u^4
    q = Q([-3, -3, -2, 1, 1])
    rep = hensel_factor_quartic(q, 3, 8)
    verdicts = {b.verdict for b in rep.blocks}
    assert "ramified" in verdicts
    assert rep.verdict == "ramified"


def test_exactly_repeated_root_behaviour():
    # (t - u)^2 (t^2 + t u + u^2) has a genuinely repeated root; its
    # double block's discriminant is exactly zero, so no finite
    # precision resolves it at 5, while at 3 the whole reduction
    # collapses to (t - u)^4 and the verdict is inconclusive
    q = Q([1, -1, 0, -1, 1])
    assert q.discriminant() == 0
    with pytest.raises(PrecisionError):
        hensel_factor_quartic(q, 5, 6)
    rep = hensel_factor_quartic(q, 3, 6)
    assert rep.verdict == "inconclusive"
    assert [b.multiplicity for b in rep.blocks] == [4]


def test_newton_vs_peval_consistency():
    f = [2, 0, 1, 1]  # x^3 + x^2 + 2
    p = 5
    for r in range(p):
        if peval(f, r, p) == 0:
            lifted = newton_lift_root(f, r, p, 8)
            assert peval(pmod(f, p**8), lifted, p**8) == 0
