"""Congruence search, certificates, and intersection-point extraction."""
import json
from fractions import Fraction
from importlib import resources

import pytest

from hmslines import (
    ConfigError,
    Line,
    SearchExhausted,
    build_model,
    certify_line,
    crt_parameter,
    derive_chart_params,
    find_lines,
    intersection_points,
    labc_line,
    parse_config,
    quartic_of_line,
)
from hmslines.hensel import hensel_factor_quartic
from hmslines.padics import IndeterminateValuation
from hmslines.search import CERTIFICATE_SCHEMA, load_config, _candidate_params, _combined_parameters

F = Fraction

REAL_LINE_ROWS = ((4, 0, -3, 3, 0, -2), (0, 20, -23, 7, 40, 6))
CHAR3_LINE_ROWS = (
    (59046, 0, -1, 59049, 243, -243),
    (0, 19682, -19683, 3, 243, -243),
)


def config_path(name):
    return str(resources.files("hmslines").joinpath(f"configs/{name}"))


def demo_config(name, **overrides):
    with open(config_path(name)) as fh:
        data = json.load(fh)
    data.update(overrides)
    return parse_config(data)


def test_crt_parameter_combines_congruences():
    rep, modulus = crt_parameter(1, 2, 3, 3, anchor=2000)
    assert (rep, modulus) == (F(2377), 3375)
    assert rep % 27 == 1
    assert rep % 125 == 2
    # nearest representative of the class to the anchor
    assert abs(rep - 2000) * 2 <= modulus


def test_crt_parameter_anchor_only():
    assert crt_parameter(anchor=F(1, 16)) == (F(1, 16), 1)


def test_crt_parameter_single_prime():
    assert crt_parameter(residue3=3, k3=4, anchor=0) == (F(3), 81)


def test_crt_parameter_rejects_non_integral_residue():
    with pytest.raises(ConfigError):
        crt_parameter(residue3=F(1, 3), k3=1)
    with pytest.raises(ConfigError):
        crt_parameter(residue5=F(7, 10), k5=2)


def test_parse_config_reads_demo():
    cfg = load_config(config_path("rho0-demo.json"))
    assert cfg.twist == "rho0-archimedean"
    assert cfg.lambda1 == 1 and cfg.lambda2 == 1
    assert cfg.seed_point == (F(-1), F(0), F(1), F(-1), F(-1), F(1))
    assert len(cfg.targets) == 1
    target = cfg.target_at("real")
    assert target is not None
    assert target.params == (F(2), F(1, 16), F(3))
    assert cfg.target_at(3) is None and cfg.target_at(5) is None
    assert cfg.k3 == 0 and cfg.k5 == 0
    assert cfg.height_bound == 50
    assert cfg.precision == 12
    # the digest is a stable hex fingerprint of the raw dict
    assert cfg.digest() == demo_config("rho0-demo.json").digest()
    assert len(cfg.digest()) == 64


def test_parse_config_rejects_defects():
    base = {
        "twist": "rho0-archimedean",
        "seed_point": ["-1", "0", "1", "-1", "-1", "1"],
        "targets": [{"place": "real", "params": ["2", "1/16", "3"]}],
    }
    bad = [
        {**base, "plume": 1},
        {**base, "twist": "moebius"},
        {**base, "lambda1": "0"},
        {**base, "seed_point": ["1", "2", "3"]},
        {**base, "targets": [{"place": "real", "params": ["0", "0", "0"]},
                             {"place": "real", "params": ["1", "0", "0"]}]},
        {**base, "targets": [{"place": 7, "params": ["0", "0", "0"]}]},
        {**base, "targets": [{"place": 3}]},
        {**base, "targets": [{"place": 3, "params": ["1", "2"]}]},
        {**base, "targets": [{"place": 3, "params": ["1", "2", "3"]}]},
        {**base, "targets": {"place": "real"}},
        {**base, "height_bound": 0},
        {**base, "precision": 0},
        {**base, "rng_seed": "soon"},
        {**base, "seed_point": None},
    ]
    for data in bad:
        with pytest.raises(ConfigError):
            parse_config(data)
    with pytest.raises(ConfigError):
        parse_config([base])
    # a place-3 target is fine once k3 names the congruence depth
    ok = {**base, "targets": [{"place": 3, "params": ["1", "2", "3"]}], "k3": 2}
    assert parse_config(ok).k3 == 2


def test_candidate_enumeration_walks_outward():
    cfg = load_config(config_path("char3-demo.json"))
    reps, moduli = _combined_parameters(cfg)
    assert reps == (F(3), F(243), F(243))
    assert moduli == (81, 81, 81)
    gen = _candidate_params(reps, moduli, cfg.height_bound)
    first = [next(gen) for _ in range(6)]
    assert first == [
        (F(3), F(243), F(243)),
        (F(-78), F(162), F(162)),
        (F(-78), F(162), F(243)),
        (F(-78), F(162), F(324)),
        (F(-78), F(243), F(162)),
        (F(-78), F(243), F(243)),
    ]
    for triple in first:
        for rep, value, m in zip(reps, triple, moduli):
            assert (value - rep) % m == 0


def test_rho0_demo_finds_real_line():
    cfg = load_config(config_path("rho0-demo.json"))
    results = find_lines(cfg, max_results=1)
    assert len(results) == 1
    line, cert = results[0]
    assert line.primitive_rows() == REAL_LINE_ROWS
    assert cert.passed
    data = cert.data
    assert data["schema"] == CERTIFICATE_SCHEMA
    assert data["config_digest"] == cfg.digest()
    assert data["chart"]["kind"] == "tangent-cone"
    assert data["chart"]["params"] == ["2", "1/16", "3"]
    assert data["real"] == {"root_count": 4, "required": True}
    assert data["summary"]["checks"] == {"real_four_roots": True}
    assert data["summary"]["reasons"] == []


def test_rho0_demo_records_ungated_local_evidence():
    # only the real place gates the demo; the 3- and 5-adic sections are
    # still recorded, and at this precision the cubic factor stays open
    cfg = load_config(config_path("rho0-demo.json"))
    (_, cert), = find_lines(cfg, max_results=1)
    for key in ("local_3", "local_5"):
        section = cert.data[key]
        assert section["required"] is False
        assert section["verdict"] == "inconclusive"
        shapes = [
            (b["degree"], b["residue_degree"], b["multiplicity"], b["verdict"])
            for b in section["blocks"]
        ]
        assert shapes == [
            (3, 1, 3, "inconclusive"),
            (1, 1, 1, "unramified"),
        ]
        assert section["points_extracted"] == 1


def test_char3_demo_finds_unramified_line():
    cfg = load_config(config_path("char3-demo.json"))
    results = find_lines(cfg, max_results=1)
    assert len(results) == 1
    line, cert = results[0]
    assert line.primitive_rows() == CHAR3_LINE_ROWS
    assert cert.passed
    data = cert.data
    assert data["chart"]["kind"] == "labc"
    assert data["chart"]["params"] == ["3", "243", "243"]
    assert data["quartic"]["disc_valuation_3"] == 10
    assert data["quartic"]["disc_valuation_5"] == 0
    assert data["galois"]["label"] == "S4"
    assert data["galois"]["solvable"] is True
    assert data["galois"]["disc_is_square"] is False
    assert data["real"] == {"root_count": 2, "required": False}
    assert data["summary"]["checks"] == {"unramified_at_3": True}

    loc3 = data["local_3"]
    assert loc3["verdict"] == "unramified"
    assert loc3["squarefree_mod_p"] is False
    assert loc3["residue_degrees"] == [1, 1, 2]
    assert loc3["points_extracted"] == 4
    assert [
        (b["degree"], b["residue_degree"], b["multiplicity"],
         b["verdict"], b["disc_valuation"])
        for b in loc3["blocks"]
    ] == [(2, 1, 2, "unramified", 4), (2, 2, 1, "unramified", None)]
    assert loc3["cusp"] == {
        "p": 3,
        "depths": [1, 1, 1],
        "distances": ["1/3", "1/3", "1/3"],
    }
    parity = loc3["parity"]
    assert (parity["ord_b"], parity["ord_c"]) == (5, 5)
    assert parity["admissible"] is False  # advisory only, does not gate


def test_char3_demo_certifies_ordinary_5_adic_points():
    cfg = load_config(config_path("char3-demo.json"))
    (_, cert), = find_lines(cfg, max_results=1)
    loc5 = cert.data["local_5"]
    assert loc5["verdict"] == "unramified"
    assert loc5["squarefree_mod_p"] is True
    assert loc5["residue_degrees"] == [2, 2]
    assert loc5["points_extracted"] == 4
    invariants = [
        {k: entry[k] for k in ("v_sigma3", "v_sigma5", "v_D", "v_u1",
                               "v_u2", "ordinary", "curve_V_avoided")}
        for entry in loc5["points"]
    ]
    assert invariants == [
        {"v_sigma3": 0, "v_sigma5": 1, "v_D": 0, "v_u1": -6, "v_u2": -3,
         "ordinary": True, "curve_V_avoided": True},
        {"v_sigma3": 0, "v_sigma5": 0, "v_D": 0, "v_u1": 0, "v_u2": 0,
         "ordinary": True, "curve_V_avoided": True},
    ]


def test_search_reruns_are_byte_identical():
    for name in ("rho0-demo.json", "char3-demo.json"):
        (_, first), = find_lines(load_config(config_path(name)), max_results=1)
        (_, second), = find_lines(load_config(config_path(name)), max_results=1)
        assert first.to_json() == second.to_json()
        assert first == second


def test_certify_line_matches_search_output():
    cfg = load_config(config_path("rho0-demo.json"))
    model = build_model(cfg)
    line = Line([(4, 0, -3, 3, 0, -2), (0, 20, -23, 7, 40, 6)])
    kind, params = derive_chart_params(line, cfg, model)
    assert kind == "tangent-cone"
    assert params == (F(2), F(1, 16), F(3))
    cert = certify_line(line, model, cfg, chart_params=params, chart_kind=kind)
    (_, found), = find_lines(cfg, max_results=1)
    assert cert.to_json() == found.to_json()


def test_search_exhausted_reports_statistics():
    # parameters of height 16 can never enter a height-1 ball
    cfg = demo_config(
        "rho0-demo.json",
        targets=[{"place": "real", "params": ["1/16", "1/16", "1/16"]}],
        height_bound=1,
    )
    with pytest.raises(SearchExhausted) as info:
        find_lines(cfg, max_results=1)
    stats = info.value.stats
    assert stats["candidates"] == 0
    assert set(stats) == {
        "candidates", "chart_failures", "off_surface", "degenerate",
        "zero_discriminant", "duplicates", "precision_failures",
        "gate_failures",
    }
    assert all(v == 0 for v in stats.values())


def test_max_results_returns_partial_harvest():
    # a tiny ball around the origin holds exactly one certified line;
    # asking for ten returns that one instead of raising
    cfg = demo_config(
        "rho0-demo.json",
        targets=[{"place": "real", "params": ["0", "0", "0"]}],
        height_bound=1,
    )
    results = find_lines(cfg, max_results=10)
    assert len(results) == 1
    line, cert = results[0]
    assert line.primitive_rows() == ((3, 0, 1, 3, -5, -3), (0, 3, 5, 3, -7, -3))
    assert cert.data["chart"]["params"] == ["0", "1", "1"]
    assert cert.passed


def _form_vanishes_at(model, pt):
    for k in (1, 2, 4):
        value = model.forms[k].evaluate(list(pt.coords))
        if pt.kind == "rational":
            n = int(Fraction(value))
            if n == 0:
                continue
            v = 0
            while n % pt.p == 0:
                n //= pt.p
                v += 1
        else:
            v = value.valuation()
            if isinstance(v, IndeterminateValuation):
                continue
        assert v >= pt.prec


def test_intersection_points_lie_on_the_surface():
    cfg = load_config(config_path("char3-demo.json"))
    model = build_model(cfg)
    line = labc_line(3, 243, 243)
    quartic = quartic_of_line(line, model)

    report3 = hensel_factor_quartic(quartic, 3, 8)
    points3 = intersection_points(line, quartic, report3)
    assert [(pt.kind, pt.conjugates) for pt in points3] == [
        ("rational", 1), ("rational", 1), ("unramified", 2),
    ]
    assert sum(pt.conjugates for pt in points3) == 4
    # the double root pair is only pinned down to half the working
    # precision once the discriminant's 3^4 is peeled off
    assert [pt.prec for pt in points3] == [4, 4, 8]

    report5 = hensel_factor_quartic(quartic, 5, 12)
    points5 = intersection_points(line, quartic, report5)
    assert [(pt.kind, pt.residue_degree) for pt in points5] == [
        ("unramified", 2), ("unramified", 2),
    ]
    assert sum(pt.conjugates for pt in points5) == 4

    for pt in points3 + points5:
        _form_vanishes_at(model, pt)
