import random
from fractions import Fraction

import pytest

from hmslines import (
    DegenerateLineError,
    HmsError,
    Line,
    NotOnSurfaceError,
    RegimeError,
    SparsePoly,
    TangentConeChart,
    char3_leading_profile,
    char3_quartic_display,
    cusp_proximity,
    elementary_symmetric,
    labc_line,
    labc_params_of_line,
    line_through,
    parity_admissible,
    quartic_of_line,
    real_root_count,
    rho0_twist,
    tangent_cone_lines,
    twist_by_name,
    twisted_equations,
)
from hmslines.errors import ConicPointError
from hmslines.lines import ConicParam, lies_in, primitive_vector, rational_conic_point

F = Fraction

RHO0_SEED = (F(-1), F(0), F(1), F(-1), F(-1), F(1))


def rho0_model():
    return twisted_equations(rho0_twist())


def char3_model(l1=1, l2=1):
    return twisted_equations(twist_by_name("char3-x", l1, l2))


def test_line_canonical_form_and_equality():
    a = Line([(2, 0, 4, 0, 0, 0), (0, 3, 3, 0, 0, 0)])
    b = Line([(2, 3, 7, 0, 0, 0), (4, -3, 5, 0, 0, 0)])
    assert a == b
    assert a.rows[0][0] == 1 and a.rows[1][1] == 1
    assert a.pivots == (0, 1)
    pt = a.point_at(F(5), F(-2))
    assert a.contains(pt)
    assert not a.contains((1, 0, 0, 0, 0, 1))


def test_line_rejects_bad_spans():
    with pytest.raises(DegenerateLineError):
        Line([(1, 2, 3, 4, 5, 6), (2, 4, 6, 8, 10, 12)])
    with pytest.raises(HmsError):
        Line([(1, 0, 0), (0, 1, 0)])


def test_primitive_vector():
    assert primitive_vector((F(-2, 3), F(4, 9), F(0))) == (3, -2, 0)
    assert primitive_vector((0, F(5), F(10))) == (0, 1, 2)
    with pytest.raises(HmsError):
        primitive_vector((0, 0, 0))


def test_line_through_coordinate_line():
    ln = line_through((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0))
    assert ln.rows == (
        (1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
    )
    with pytest.raises(DegenerateLineError):
        line_through((1, 2, 0, 0, 0, 0), (2, 4, 0, 0, 0, 0))


def test_real_line_contains_published_point():
    model = rho0_model()
    chart = TangentConeChart(model, RHO0_SEED)
    line = chart.line_at(F(2), F(1, 16), F(3))
    assert line.contains((F(7, 15), F(-1), F(4, 5), F(0), F(-2), F(-8, 15)))
    assert lies_in(line, model.q1)
    assert lies_in(line, model.q2)
    assert not lies_in(line, elementary_symmetric(2, 6))


def test_real_line_chart_coordinates():
    chart = TangentConeChart(rho0_model(), RHO0_SEED)
    line = chart.line_at(F(2), F(1, 16), F(3))
    assert line.rows == (
        (F(1), F(0), F(-3, 4), F(3, 4), F(0), F(-1, 2)),
        (F(0), F(1), F(-23, 20), F(7, 20), F(2), F(3, 10)),
    )
    assert line.primitive_rows() == ((4, 0, -3, 3, 0, -2), (0, 20, -23, 7, 40, 6))
    assert chart.params_of(line) == (F(2), F(1, 16), F(3))


def test_real_line_quartic():
    model = rho0_model()
    chart = TangentConeChart(model, RHO0_SEED)
    line = chart.line_at(F(2), F(1, 16), F(3))
    q = quartic_of_line(line, model)
    assert q.coeffs == (F(-3993, 500), F(663, 125), F(1017, 50), F(39, 5), F(3, 4))
    assert real_root_count(q) == 4


def test_quartic_of_line_requires_quadric_containment():
    model = rho0_model()
    off = Line([(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)])
    with pytest.raises(NotOnSurfaceError):
        quartic_of_line(off, model)


def test_restriction_commutes_with_evaluation():
    model = char3_model()
    line = labc_line(F(2), F(3), F(4))
    q = quartic_of_line(line, model)
    rng = random.Random(5)
    for _ in range(6):
        t = F(rng.randint(-9, 9), rng.randint(1, 4))
        u = F(rng.randint(-9, 9), rng.randint(1, 4))
        assert q.evaluate(t, u) == model.q4.evaluate(line.point_at(t, u))


def test_chart_roundtrip_is_exact_off_the_seed():
    chart = TangentConeChart(rho0_model(), RHO0_SEED)
    triples = [
        (F(2), F(1, 16), F(3)),
        (F(1), F(1), F(0)),
        (F(3), F(2), F(1)),
        (F(-1), F(1, 2), F(2)),
        (F(5), F(-2, 3), F(-1)),
        (F(-2), F(3), F(1, 4)),
        (F(0), F(-1, 3), F(5)),
        (F(0), F(2), F(-1)),
    ]
    for abc in triples:
        line = chart.line_at(*abc)
        assert chart.params_of(line) == abc


def test_chart_inverts_through_seed_lines_at_line_level():
    # lines through the seed live on a collapsed stratum: many (a, c)
    # pairs give the same ruling, so only the line itself comes back
    chart = TangentConeChart(rho0_model(), RHO0_SEED)
    for abc in [(F(2), F(0), F(3)), (F(-1), F(0), F(1, 2)), (F(0), F(0), F(4))]:
        line = chart.line_at(*abc)
        a, b, c = chart.params_of(line)
        assert b == 0
        assert chart.line_at(a, b, c) == line


def test_chart_lines_stay_in_the_quadrics():
    model = rho0_model()
    chart = TangentConeChart(model, RHO0_SEED)
    rng = random.Random(17)
    for _ in range(25):
        a = F(rng.randint(-8, 8), rng.randint(1, 5))
        b = F(rng.randint(-8, 8), rng.randint(1, 5))
        c = F(rng.randint(-8, 8), rng.randint(1, 5))
        line = chart.line_at(a, b, c)
        assert lies_in(line, model.q1)
        assert lies_in(line, model.q2)


def test_chart_needs_a_pencil_point():
    with pytest.raises(NotOnSurfaceError):
        TangentConeChart(rho0_model(), (1, 0, 0, 0, 0, 0))


def test_tangent_cone_lines_through_base_point():
    model = rho0_model()
    seen = []
    for r, s in ((0, 1), (1, 1), (2, 1), (1, 2)):
        line = tangent_cone_lines(model, RHO0_SEED, F(r), F(s))
        assert line.contains(RHO0_SEED)
        assert lies_in(line, model.q1)
        assert lies_in(line, model.q2)
        seen.append(line)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            assert seen[i] != seen[j]
            # the two rulings meet only at the base point
            from hmslines.linalg import rref

            stacked = [list(seen[i].rows[0]), list(seen[i].rows[1]), list(seen[j].rows[0]), list(seen[j].rows[1])]
            _, pivots = rref(stacked)
            assert len(pivots) == 3


def test_labc_cusp_line():
    model = char3_model()
    cusp = labc_line(0, 0, 0)
    assert cusp == Line([(0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)])
    assert lies_in(cusp, model.q1)
    assert lies_in(cusp, model.q2)
    assert lies_in(cusp, model.q4)
    q = quartic_of_line(cusp, model)
    assert q.is_degenerate
    assert q.coeffs == (0, 0, 0, 0, 0)
    with pytest.raises(DegenerateLineError):
        q.discriminant()


def test_labc_family_in_quadrics():
    model = char3_model()
    rng = random.Random(23)
    for _ in range(50):
        a = F(rng.randint(-20, 20), rng.randint(1, 7))
        b = F(rng.randint(-20, 20), rng.randint(1, 7))
        c = F(rng.randint(-20, 20), rng.randint(1, 7))
        line = labc_line(a, b, c)
        assert lies_in(line, model.q1)
        assert lies_in(line, model.q2)


def test_labc_parameter_recovery():
    a, b, c = F(2), F(3), F(4)
    assert labc_params_of_line(labc_line(a, b, c)) == (a, b, c)
    assert labc_params_of_line(labc_line(F(-1, 2), F(0), F(7, 3))) == (
        F(-1, 2),
        F(0),
        F(7, 3),
    )
    stranger = Line([(1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0)])
    with pytest.raises(HmsError):
        labc_params_of_line(stranger)


def test_labc_demo_line_is_rational():
    line = labc_line(3, 243, 243)
    assert line.primitive_rows() == (
        (59046, 0, -1, 59049, 243, -243),
        (0, 19682, -19683, 3, 243, -243),
    )


def test_conic_point_and_chord_parametrization():
    conic = SparsePoly(3, {(2, 0, 0): F(1), (0, 2, 0): F(1), (0, 0, 2): F(-2)})
    base = rational_conic_point(conic)
    assert base == [F(-1), F(-1), F(-1)]
    param = ConicParam(conic, base)
    pt = param.point(2, 3)
    assert pt == [F(14), F(46), F(-34)]
    assert conic.evaluate(pt) == 0
    r, s = param.param_of(pt)
    assert s != 0 and r / s == F(2, 3)
    rng = random.Random(3)
    for _ in range(10):
        r0, s0 = rng.randint(-9, 9), rng.randint(1, 9)
        w = param.point(r0, s0)
        assert conic.evaluate(w) == 0
        r1, s1 = param.param_of(w)
        assert r1 * s0 == s1 * r0


def test_definite_conic_reports_extension():
    definite = SparsePoly(3, {(2, 0, 0): F(1), (0, 2, 0): F(1), (0, 0, 2): F(1)})
    with pytest.raises(ConicPointError) as info:
        rational_conic_point(definite, height=6)
    assert info.value.extension_disc == -1


def test_char3_display_is_scaled_quartic():
    for l1, l2 in ((1, 1), (3, F(1, 2)), (2, 5)):
        display = char3_quartic_display(l1, l2)
        model = char3_model(l1, l2)
        scaled = model.forms[4].map_coeffs(lambda z: z * 27 * model.scales[4])
        assert display == scaled
        assert display.terms[(3, 0, 0, 0, 0, 1)] == F(l1) ** 3


def test_char3_leading_profile_valuations():
    profile = char3_leading_profile(1, 1)
    assert len(profile.coeffs) == 5
    assert profile.coefficient_valuations(5, 40, 41) == (41, 40, 11, 41, 40)
    # a nontrivial twist parameter shifts the two top coefficients by
    # exactly the valuation of lambda1^(-3)
    shifted = char3_leading_profile(3, 1)
    assert shifted.coefficient_valuations(5, 40, 41) == (41, 40, 11, 38, 37)


def test_char3_profile_regime_must_separate():
    profile = char3_leading_profile(1, 1)
    with pytest.raises(RegimeError):
        profile.coefficient_valuations(0, 0, 0)


def test_parity_admissible_rule():
    assert parity_admissible(4, 7, 0, 1) is True
    assert parity_admissible(3, 7, 0, 1) is False
    assert parity_admissible(0, 0, 0, 0) is True
    rng = random.Random(9)
    for _ in range(30):
        args = [rng.randint(0, 9) for _ in range(4)]
        base = parity_admissible(*args)
        for i in range(4):
            bumped = list(args)
            bumped[i] += 2
            assert parity_admissible(*bumped) == base


def test_cusp_proximity_examples():
    exact = cusp_proximity([(0, 1, 0, 0, 0, 0)], p=3)
    assert exact.depths == (None,)
    assert exact.distances == (F(0),)
    near = cusp_proximity([(0, 1, 0, 0, 729, 0)], p=3)
    assert near.depths == (6,)
    assert near.distances == (F(1, 729),)
    plain = cusp_proximity([(3, 1, 9, 27, 9, 3)], p=3)
    assert plain.depths == (1,)
    assert plain.distances == (F(1, 3),)


def test_cusp_proximity_respects_noncusp_choice():
    report = cusp_proximity([(9, 1, 5, 27, 81, 243)], p=3, noncusp=(0, 3))
    assert report.depths == (2,)
    with pytest.raises(HmsError):
        cusp_proximity([(0, 0, 0, 0, 0, 0)], p=3)


def test_cusp_proximity_refuses_unresolved_coordinates():
    from hmslines import PadicApprox
    from hmslines.errors import PrecisionError

    unit = PadicApprox.nonzero(3, 0, 1, 5)
    deep = PadicApprox.nonzero(3, 3, 1, 5)
    fog = PadicApprox.zero_at(3, 2)

    # Every gauge coordinate is indistinguishable from zero: the depth
    # could be anything at this precision, so the report must refuse.
    with pytest.raises(PrecisionError):
        cusp_proximity([(fog, unit, fog, fog, fog, fog)], p=3)

    # A certified depth of 3 cannot stand while another gauge coordinate
    # might still have valuation 2.
    with pytest.raises(PrecisionError):
        cusp_proximity([(deep, unit, 0, fog, 0, 0)], p=3)

    # Once the unresolved coordinate is known to be deeper than the
    # certified one, the report goes through.
    settled = PadicApprox.zero_at(3, 9)
    ok = cusp_proximity([(deep, unit, 0, settled, 0, 0)], p=3)
    assert ok.depths == (3,)
    assert ok.distances == (F(1, 27),)

    # A point with no certified coordinate at all is a precision problem
    # as well, not a malformed input.
    with pytest.raises(PrecisionError):
        cusp_proximity([(fog, fog, fog, fog, fog, fog)], p=3)
