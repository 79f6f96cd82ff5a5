"""Congruence-guided line search and solvable-point certificates.

A search configuration prescribes local behaviour at up to three places
(the real one and the primes 3 and 5) through parameter triples in a
line chart.  The searcher combines the congruence targets by the
Chinese remainder theorem, walks candidate parameters outward from the
combined representative, and certifies each resulting line: real root
count of the restricted quartic, unramified splitting over Z_3 and Z_5,
ordinarity of the 5-adic intersection points, and avoidance of the
degenerate curve.  Certificates serialize to canonical JSON so repeated
runs are byte identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    ConfigError,
    ConicPointError,
    DegenerateLineError,
    HmsError,
    NotOnSurfaceError,
    PrecisionError,
    RegimeError,
    SearchExhausted,
    SingularPointError,
)
from .hensel import hensel_factor_quartic, hensel_pair_lift, pdivmod, pmod
from .lines import (
    Line,
    TangentConeChart,
    cusp_proximity,
    labc_line,
    labc_params_of_line,
    parity_admissible,
    quartic_of_line,
)
from .padics import PadicApprox, UnramifiedRing
from .quartics import BinaryQuartic, real_root_count
from .galois import solvability_report
from .serialize import canonical_json, config_digest, frac_str, parse_frac
from .surface import SurfaceModel, twist_by_name, twisted_equations

CERTIFICATE_SCHEMA = "hmslines-certificate/1"

_TWIST_NAMES = ("identity", "rho0-archimedean", "char3-x")
_CONFIG_KEYS = {
    "twist",
    "lambda1",
    "lambda2",
    "seed_point",
    "targets",
    "k3",
    "k5",
    "height_bound",
    "precision",
    "rng_seed",
}


# -- configuration -----------------------------------------------------


@dataclass
class LocalTarget:
    """Requested behaviour at one place: "real", 3, or 5.

    params is the chart triple (a, b, c) anchoring the search at that
    place; at a finite place only its residues modulo p^k matter.
    """

    place: object
    params: tuple


@dataclass
class SearchConfig:
    twist: str
    lambda1: Fraction
    lambda2: Fraction
    seed_point: tuple | None
    targets: tuple
    k3: int
    k5: int
    height_bound: int
    precision: int
    rng_seed: int
    raw: dict

    def digest(self) -> str:
        return config_digest(self.raw)

    def target_at(self, place):
        for t in self.targets:
            if t.place == place:
                return t
        return None


def _parse_place(raw):
    if raw == "real":
        return "real"
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"unknown place {raw!r}; expected 'real', 3, or 5")
    if value not in (3, 5):
        raise ConfigError(f"unsupported finite place {value}; expected 3 or 5")
    return value


def _parse_int(data, key, default, minimum):
    raw = data.get(key, default)
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ConfigError(f"{key} must be an integer")
    if raw < minimum:
        raise ConfigError(f"{key} must be at least {minimum}")
    return raw


def parse_config(data: dict) -> SearchConfig:
    """Validate a configuration dict; raises ConfigError on any defect."""
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
    twist = data.get("twist")
    if twist not in _TWIST_NAMES:
        raise ConfigError(
            f"twist must be one of {_TWIST_NAMES}, got {twist!r}"
        )
    try:
        lambda1 = parse_frac(data.get("lambda1", "1"))
        lambda2 = parse_frac(data.get("lambda2", "1"))
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"bad twist parameter: {exc}")
    if lambda1 == 0 or lambda2 == 0:
        raise ConfigError("twist parameters lambda1, lambda2 must be nonzero")

    seed_raw = data.get("seed_point")
    seed_point = None
    if seed_raw is not None:
        if not isinstance(seed_raw, (list, tuple)) or len(seed_raw) != 6:
            raise ConfigError("seed_point must be a list of 6 rationals")
        seed_point = tuple(parse_frac(c) for c in seed_raw)

    targets_raw = data.get("targets", [])
    if not isinstance(targets_raw, list):
        raise ConfigError("targets must be a list")
    targets = []
    seen_places = set()
    for entry in targets_raw:
        if not isinstance(entry, dict) or "place" not in entry:
            raise ConfigError("each target needs a 'place' key")
        place = _parse_place(entry["place"])
        if place in seen_places:
            raise ConfigError(f"duplicate target for place {place!r}")
        seen_places.add(place)
        params_raw = entry.get("params")
        if not isinstance(params_raw, (list, tuple)) or len(params_raw) != 3:
            raise ConfigError("target params must be a triple (a, b, c)")
        params = tuple(parse_frac(v) for v in params_raw)
        extra = set(entry) - {"place", "params"}
        if extra:
            raise ConfigError(f"unknown target keys: {sorted(extra)}")
        targets.append(LocalTarget(place=place, params=params))

    k3 = _parse_int(data, "k3", 0, 0)
    k5 = _parse_int(data, "k5", 0, 0)
    height_bound = _parse_int(data, "height_bound", 50, 1)
    precision = _parse_int(data, "precision", 12, 1)
    rng_seed = _parse_int(data, "rng_seed", 0, 0)

    if twist != "char3-x" and targets and seed_point is None:
        raise ConfigError("this twist needs a seed_point for the line chart")

    for t in targets:
        if t.place == 3 and k3 < 1:
            raise ConfigError("a place-3 target needs k3 >= 1")
        if t.place == 5 and k5 < 1:
            raise ConfigError("a place-5 target needs k5 >= 1")

    return SearchConfig(
        twist=twist,
        lambda1=lambda1,
        lambda2=lambda2,
        seed_point=seed_point,
        targets=tuple(targets),
        k3=k3,
        k5=k5,
        height_bound=height_bound,
        precision=precision,
        rng_seed=rng_seed,
        raw=data,
    )


def load_config(path: str) -> SearchConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read configuration: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"configuration is not valid JSON: {exc}")
    return parse_config(data)


# -- valuation helpers -------------------------------------------------


def _frac_val(x, p: int) -> int:
    """Exact p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise HmsError("valuation of zero")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _int_val(n: int, p: int, cap: int):
    """Valuation of an integer known mod p^cap; None when >= cap."""
    n %= p**cap
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _int_to_padic(n: int, p: int, prec: int) -> PadicApprox:
    v = _int_val(n, p, prec)
    if v is None:
        return PadicApprox.zero_at(p, prec)
    return PadicApprox.nonzero(p, v, (n % p**prec) // p**v, prec - v)


# -- congruence combination --------------------------------------------


def _residue_of(value, p: int, k: int) -> int:
    value = Fraction(value)
    m = p**k
    if value.denominator % p == 0:
        raise ConfigError(
            f"target parameter {frac_str(value)} is not a {p}-adic integer"
        )
    return value.numerator * pow(value.denominator, -1, m) % m


def crt_parameter(residue3=None, residue5=None, k3=0, k5=0, anchor=Fraction(0)):
    """Combine congruence targets into one representative near an anchor.

    Returns (rep, modulus).  rep satisfies rep = residue3 mod 3^k3 and
    rep = residue5 mod 5^k5 (for the constraints actually given) and is
    the representative of that class closest to the real anchor.  With
    no congruence constraints the anchor itself comes back verbatim.
    """
    anchor = Fraction(anchor)
    constraints = []
    if residue3 is not None and k3 > 0:
        constraints.append((_residue_of(residue3, 3, k3), 3**k3))
    if residue5 is not None and k5 > 0:
        constraints.append((_residue_of(residue5, 5, k5), 5**k5))
    if not constraints:
        return anchor, 1
    base, modulus = constraints[0]
    for r, m in constraints[1:]:
        inv = pow(modulus, -1, m)
        base = base + modulus * ((r - base) * inv % m)
        modulus *= m
    base %= modulus
    shift = round((anchor - base) / modulus)
    return Fraction(base + modulus * shift), modulus


# -- candidate enumeration ---------------------------------------------


def _shell_offsets(radius: int):
    """Integer triples with sup norm exactly radius, lexicographic."""
    if radius == 0:
        yield (0, 0, 0)
        return
    r = radius
    for i in range(-r, r + 1):
        for j in range(-r, r + 1):
            for k in range(-r, r + 1):
                if max(abs(i), abs(j), abs(k)) == r:
                    yield (i, j, k)


def _height(x: Fraction) -> int:
    return max(abs(x.numerator), x.denominator)


def _candidate_params(reps, moduli, height_bound):
    """Walk chart triples outward from the combined representative."""
    max_radius = 1
    for rep, m in zip(reps, moduli):
        max_radius = max(max_radius, (height_bound + abs(rep)) // m + 1)
    for radius in range(int(max_radius) + 1):
        for off in _shell_offsets(radius):
            triple = tuple(
                rep + n * m for rep, m, n in zip(reps, moduli, off)
            )
            if all(_height(v) <= height_bound for v in triple):
                yield triple


# -- intersection points over Z_p ----------------------------------------


@dataclass
class LocalPoint:
    """One p-adic intersection point of a line with the degree-8 locus.

    kind "rational" stores integer coordinates mod p^prec; kind
    "unramified" stores coordinates in an unramified extension ring,
    standing for `conjugates` Galois-conjugate geometric points.
    """

    block: int
    kind: str
    coords: tuple
    p: int
    prec: int
    residue_degree: int
    conjugates: int
    modulus: tuple | None = None


def _primitive_coeffs(q: BinaryQuartic):
    cs = [Fraction(c) for c in q.coeffs]
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    cont = 0
    for c in ints:
        cont = gcd(cont, c)
    if cont == 0:
        raise DegenerateLineError("the zero form has no intersection points")
    return [c // cont for c in ints]


def _scaled_integer_rows(line: Line):
    """Integer multiples (by one common factor) of the parametrizing rows.

    point_at(t, u) scaled by the common denominator, so the [t : u]
    chart of quartic_of_line is preserved while coordinates of points
    with integral t, u become integers.
    """
    den = 1
    for row in line.rows:
        for c in row:
            c = Fraction(c)
            den = den * c.denominator // gcd(den, c.denominator)
    return tuple(
        tuple(int(Fraction(c) * den) for c in row) for row in line.rows
    )


def _complete_to_sl2(alpha: int, beta: int):
    """gamma, delta with alpha*delta - beta*gamma = 1."""
    if gcd(alpha, beta) != 1:
        raise HmsError("chart point must be primitive")
    old_r, r = alpha, beta
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    # old_s*alpha + old_t*beta = old_r = +-1
    if old_r == -1:
        old_s, old_t = -old_s, -old_t
    return -old_t, old_s


def _binary_transform(coeffs, mat):
    """Coefficients of f(a t + b u, c t + d u) for a binary form f.

    coeffs[i] is the coefficient of t^i u^(deg - i), matching the
    quartic convention; mat = ((a, b), (c, d)).
    """
    (a, b), (c, d) = mat
    deg = len(coeffs) - 1
    out = [0] * (deg + 1)
    for i, coeff in enumerate(coeffs):
        if coeff == 0:
            continue
        # (a t + b u)^i (c t + d u)^(deg - i), expanded by convolution
        first = [1]
        for _ in range(i):
            nxt = [0] * (len(first) + 1)
            for e, v in enumerate(first):
                nxt[e + 1] += v * a
                nxt[e] += v * b
            first = nxt
        for _ in range(deg - i):
            nxt = [0] * (len(first) + 1)
            for e, v in enumerate(first):
                nxt[e + 1] += v * c
                nxt[e] += v * d
            first = nxt
        for e, v in enumerate(first):
            out[e] += coeff * v
    return out


def _sqrt_mod_p(a: int, p: int):
    a %= p
    for r in range(p):
        if r * r % p == a:
            return r
    return None


def _newton_sqrt(w: int, r0: int, p: int, K: int) -> int:
    """Lift r0^2 = w (mod p) to a square root mod p^K (p odd, w a unit)."""
    r = r0 % p
    mod = p
    target = p**K
    while mod < target:
        mod = min(mod * mod, target)
        r = (r - (r * r - w) * pow(2 * r, -1, mod)) % mod
    return r


def _point_from_projective(rows, t, u, p, prec, block_idx):
    m = p**prec
    coords = tuple((t * a + u * b) % m for a, b in zip(rows[0], rows[1]))
    return LocalPoint(
        block=block_idx,
        kind="rational",
        coords=coords,
        p=p,
        prec=prec,
        residue_degree=1,
        conjugates=1,
    )


def _points_of_double_root_block(rows, blk, p, K, block_idx):
    """(linear)^2 block with even disc valuation: complete the square."""
    c0, c1, c2 = [c % p**K for c in blk.coeffs_mod]
    if c2 % p != 0:
        a0, a1, a2 = c0, c1, c2
        t_chart = True
    elif c0 % p != 0:
        a0, a1, a2 = c2, c1, c0
        t_chart = False
    else:
        raise HmsError("double-root block with both ends divisible by p")
    disc = (a1 * a1 - 4 * a0 * a2) % p**K
    v = _int_val(disc, p, K)
    if v is None:
        raise PrecisionError(
            "block discriminant vanishes to working precision", needed=K + 1
        )
    if v % 2 != 0:
        raise HmsError("odd-valuation discriminant in an unramified block")
    keff = K - v
    half = v // 2
    mk = p**keff
    w = (disc // p**v) % mk
    inv_lead = Fraction(1, 2 * a2)
    r0 = _sqrt_mod_p(w, p)
    points = []
    if r0 is not None:
        s = _newton_sqrt(w, r0, p, keff)
        for sign in (1, -1):
            z = (
                (-a1 + sign * p**half * s)
                * pow(inv_lead.denominator, -1, mk)
                * inv_lead.numerator
            ) % mk
            t, u = (z, 1) if t_chart else (1, z)
            points.append(
                _point_from_projective(rows, t, u, p, keff, block_idx)
            )
        return points
    ring = UnramifiedRing(p, [(-w) % mk, 0, 1], keff)
    z = (ring.gen() * p**half - a1) * ring.from_rational(inv_lead)
    if t_chart:
        coords = tuple(z * a + b for a, b in zip(rows[0], rows[1]))
    else:
        coords = tuple(a + z * b for a, b in zip(rows[0], rows[1]))
    return [
        LocalPoint(
            block=block_idx,
            kind="unramified",
            coords=coords,
            p=p,
            prec=keff,
            residue_degree=2,
            conjugates=2,
            modulus=ring.modulus,
        )
    ]


def _lift_residue_factor(ints, g_mod_p, p, K):
    """Hensel lift a residue factor of the quartic to a factor mod p^K.

    ints are the primitive integer coefficients (t^i u^(4-i)); g_mod_p
    a residue factor in the same convention, irreducible mod p of
    degree >= 2.  Returns (monic affine modulus low->high, chart matrix)
    so that the root is [m00 xi + m01 : m10 xi + m11].
    """
    for alpha, beta in [(1, 0), (0, 1)] + [(1, s) for s in range(1, p)]:
        acc = 0
        for i, c in enumerate(ints):
            acc += c * alpha**i * beta ** (4 - i)
        if acc % p != 0:
            break
    else:
        raise HmsError("quartic vanishes on all of P^1 mod p")
    gamma, delta = _complete_to_sl2(alpha, beta)
    mat = ((alpha, gamma), (beta, delta))
    f_t = _binary_transform(ints, mat)
    g_t = _binary_transform(list(g_mod_p), mat)
    mK = p**K
    inv_f = pow(f_t[-1] % mK, -1, mK)
    f_monic = [c * inv_f % mK for c in f_t]
    inv_g = pow(g_t[-1] % p, -1, p)
    g_monic = [c * inv_g % p for c in g_t]
    h0, rem = pdivmod(f_monic, g_monic, p)
    if any(rem):
        raise HmsError("residue factor does not divide the reduction")
    g_lift, _ = hensel_pair_lift(f_monic, g_monic, h0, p, K)
    return g_lift, mat


def _points_of_block(rows, ints, blk, p, K, block_idx, block_is_lifted):
    if blk.lifted_root is not None:
        t, u = blk.lifted_root
        return [_point_from_projective(rows, t, u, p, K, block_idx)]
    if blk.degree == 2 and blk.residue_degree == 1 and blk.multiplicity == 2:
        if blk.verdict != "unramified":
            return []
        return _points_of_double_root_block(rows, blk, p, K, block_idx)
    if blk.residue_degree >= 2 and blk.multiplicity == 1:
        coeffs = blk.coeffs_mod
        mK = p**K
        if block_is_lifted:
            # already a factor mod p^K; the top coefficient is a unit
            # because an irreducible residue factor of degree >= 2 has
            # no root at infinity
            inv = pow(coeffs[-1] % mK, -1, mK)
            modulus = [c * inv % mK for c in coeffs]
            mat = ((1, 0), (0, 1))
        else:
            modulus, mat = _lift_residue_factor(ints, coeffs, p, K)
        ring = UnramifiedRing(p, modulus, K)
        xi = ring.gen()
        t = xi * mat[0][0] + mat[0][1]
        u = xi * mat[1][0] + mat[1][1]
        coords = tuple(t * a + u * b for a, b in zip(rows[0], rows[1]))
        return [
            LocalPoint(
                block=block_idx,
                kind="unramified",
                coords=coords,
                p=p,
                prec=K,
                residue_degree=blk.residue_degree,
                conjugates=blk.residue_degree,
                modulus=ring.modulus,
            )
        ]
    return []


def intersection_points(line: Line, quartic: BinaryQuartic, report):
    """Extract explicit p-adic intersection points from a local report.

    Blocks whose verdict is ramified or inconclusive contribute no
    points (their roots live outside the unramified tower or are not
    pinned down at this precision).
    """
    rows = _scaled_integer_rows(line)
    ints = _primitive_coeffs(quartic)
    p, K = report.p, report.prec
    lifted = not report.squarefree_mod_p
    points = []
    for idx, blk in enumerate(report.blocks):
        points.extend(_points_of_block(rows, ints, blk, p, K, idx, lifted))
    return points


# -- local invariants at an intersection point ----------------------------


def _form_valuation(form, pt: LocalPoint):
    value = form.evaluate(list(pt.coords))
    if pt.kind == "rational":
        value = Fraction(value)
        assert value.denominator == 1
        return _int_val(int(value), pt.p, pt.prec)
    v = value.valuation()
    return v if isinstance(v, int) else None


def _point_invariants(model: SurfaceModel, pt: LocalPoint) -> dict:
    """Valuations of sigma_3, sigma_5, D and the ordinarity ratios.

    The ratios u1 = D^5 / sigma_5^6 and u2 = D^3 / (sigma_5^3 sigma_3)
    are invariant under scaling the coordinates, so any integral
    representative of the projective point gives the same answer.
    """
    p, prec = pt.p, pt.prec
    f3 = model.forms[3].evaluate(list(pt.coords))
    f5 = model.forms[5].evaluate(list(pt.coords))
    f6 = model.forms[6].evaluate(list(pt.coords))
    s3, s5, s6 = model.scales[3], model.scales[5], model.scales[6]

    def val_of(value):
        if pt.kind == "rational":
            return _int_val(int(Fraction(value)), p, prec)
        v = value.valuation()
        return v if isinstance(v, int) else None

    vf3, vf5, vf6 = val_of(f3), val_of(f5), val_of(f6)
    v_s3 = _frac_val(s3, p) + vf3 if vf3 is not None else None
    v_s5 = _frac_val(s5, p) + vf5 if vf5 is not None else None

    # D = s3^2 f3^2 - 4 s6 f6; pull out the common p-power of the scales
    # so the bracket can be evaluated with p-integral coefficients.
    shift = min(2 * _frac_val(s3, p), _frac_val(4 * s6, p))
    ra = s3 * s3 / Fraction(p) ** shift
    rb = 4 * s6 / Fraction(p) ** shift
    if pt.kind == "rational":
        m = p**prec
        A = ra.numerator * pow(ra.denominator, -1, m) % m
        B = rb.numerator * pow(rb.denominator, -1, m) % m
        bracket = (A * int(Fraction(f3)) ** 2 - B * int(Fraction(f6))) % m
        vb = _int_val(bracket, p, prec)
    else:
        ring = next(c.ring for c in pt.coords if hasattr(c, "ring"))
        bracket = ring.from_rational(ra) * f3 * f3 - ring.from_rational(rb) * f6
        v = bracket.valuation()
        vb = v if isinstance(v, int) else None
    v_D = shift + vb if vb is not None else None

    v_u1 = 5 * v_D - 6 * v_s5 if None not in (v_D, v_s5) else None
    v_u2 = (
        3 * v_D - 3 * v_s5 - v_s3 if None not in (v_D, v_s5, v_s3) else None
    )
    ordinary = None
    if v_u1 is not None and v_u2 is not None:
        ordinary = v_u1 <= 0 and v_u2 <= 0
    return {
        "block": pt.block,
        "kind": pt.kind,
        "residue_degree": pt.residue_degree,
        "conjugates": pt.conjugates,
        "precision": pt.prec,
        "v_sigma3": v_s3,
        "v_sigma5": v_s5,
        "v_D": v_D,
        "v_u1": v_u1,
        "v_u2": v_u2,
        "ordinary": ordinary,
        "curve_V_avoided": v_D is not None,
    }


def _cusp_report(points, p, prec):
    """Distance of 3-adic intersection points from the cusp line x1 = x2."""
    wrapped = []
    for pt in points:
        if pt.kind == "rational":
            wrapped.append(
                [_int_to_padic(c, p, pt.prec) for c in pt.coords]
            )
        else:
            wrapped.append(list(pt.coords))
    if not wrapped:
        return None
    report = cusp_proximity(wrapped, p=p)
    return {
        "p": report.p,
        "depths": list(report.depths),
        "distances": [
            None if d is None else frac_str(d) for d in report.distances
        ],
    }


# -- certificates --------------------------------------------------------


class SolvableLineCertificate:
    """Verification record for one line; serializes canonically."""

    def __init__(self, data: dict):
        self.data = data

    @property
    def passed(self) -> bool:
        return self.data["summary"]["passed"]

    @property
    def reasons(self):
        return self.data["summary"]["reasons"]

    def to_json(self) -> str:
        return canonical_json(self.data)

    def __eq__(self, other):
        return (
            isinstance(other, SolvableLineCertificate)
            and self.to_json() == other.to_json()
        )

    def __repr__(self):
        state = "passed" if self.passed else "failed"
        return f"<SolvableLineCertificate {state}>"


def _serialize_block(blk) -> dict:
    return {
        "degree": blk.degree,
        "residue_degree": blk.residue_degree,
        "multiplicity": blk.multiplicity,
        "verdict": blk.verdict,
        "disc_valuation": blk.disc_valuation,
    }


def _galois_section(quartic: BinaryQuartic) -> dict:
    rep = solvability_report(quartic)
    return {
        "label": rep.overall_label,
        "solvable": rep.solvable,
        "disc_is_square": rep.disc_is_square,
        "splitting_degree_bound": rep.splitting_degree_bound,
        "factors": [
            {"degree": len(coeffs) - 1, "label": label, "order": order}
            for coeffs, label, order in rep.factors
        ],
    }


def _parity_section(line: Line, config: SearchConfig):
    try:
        a, b, c = labc_params_of_line(line)
    except HmsError:
        return None
    ord_b = _frac_val(b, 3) if b != 0 else None
    ord_c = _frac_val(c, 3) if c != 0 else None
    ord_l1 = _frac_val(config.lambda1, 3)
    ord_l2 = _frac_val(config.lambda2, 3)
    admissible = None
    if ord_b is not None and ord_c is not None:
        admissible = parity_admissible(ord_b, ord_c, ord_l1, ord_l2)
    return {
        "a": frac_str(a),
        "b": frac_str(b),
        "c": frac_str(c),
        "ord_b": ord_b,
        "ord_c": ord_c,
        "ord_lambda1": ord_l1,
        "ord_lambda2": ord_l2,
        "admissible": admissible,
    }


def _local_section(line, quartic, model, config, p):
    """Hensel report, intersection points, and p-specific extras."""
    report = hensel_factor_quartic(quartic, p, config.precision)
    points = intersection_points(line, quartic, report)
    section = {
        "p": p,
        "precision": report.prec,
        "squarefree_mod_p": report.squarefree_mod_p,
        "residue_degrees": list(report.residue_degrees),
        "verdict": report.verdict,
        "blocks": [_serialize_block(b) for b in report.blocks],
        "points_extracted": sum(pt.conjugates for pt in points),
    }
    if p == 3 and config.twist == "char3-x":
        section["cusp"] = _cusp_report(points, 3, config.precision)
        section["parity"] = _parity_section(line, config)
    if p == 5:
        section["points"] = [_point_invariants(model, pt) for pt in points]
    return section, points


def _gate_real(section) -> bool:
    return section is not None and section.get("root_count") == 4


def _gate_unramified(section) -> bool:
    return section is not None and section["verdict"] == "unramified"


def _gate_ordinary(section) -> bool:
    if not _gate_unramified(section):
        return False
    if section.get("points_extracted") != 4:
        return False
    for entry in section.get("points", []):
        if entry["ordinary"] is not True:
            return False
        if entry["curve_V_avoided"] is not True:
            return False
    return True


def certify_line(
    line: Line,
    model: SurfaceModel,
    config: SearchConfig,
    chart_params=None,
    chart_kind=None,
) -> SolvableLineCertificate:
    """Run every check on one line and assemble the certificate.

    The summary gates only on the places the configuration targets;
    everything else is recorded as evidence.  Raises PrecisionError
    when a local factorization cannot be resolved at the configured
    precision, NotOnSurfaceError or DegenerateLineError when the line
    is not a generator of the model at all.
    """
    quartic = quartic_of_line(line, model)
    if all(c == 0 for c in quartic.coeffs):
        raise DegenerateLineError("the line lies inside the degree-8 locus")
    disc = quartic.discriminant()
    prim = _primitive_coeffs(quartic)

    data = {
        "schema": CERTIFICATE_SCHEMA,
        "config_digest": config.digest(),
        "twist": {
            "label": config.twist,
            "lambda1": frac_str(config.lambda1),
            "lambda2": frac_str(config.lambda2),
        },
        "chart": {
            "kind": chart_kind,
            "params": None
            if chart_params is None
            else [frac_str(Fraction(v)) for v in chart_params],
            "seed": None
            if config.seed_point is None
            else [frac_str(c) for c in config.seed_point],
        },
        "line": {
            "rows": [[frac_str(Fraction(c)) for c in row] for row in line.rows],
            "primitive_rows": [list(r) for r in line.primitive_rows()],
        },
        "quartic": {
            "coeffs": [frac_str(Fraction(c)) for c in quartic.coeffs],
            "primitive_coeffs": prim,
            "discriminant": frac_str(Fraction(disc)),
        },
    }

    reasons = []
    if disc == 0:
        data["galois"] = None
        data["real"] = None
        data["local_3"] = None
        data["local_5"] = None
        reasons.append("discriminant vanishes: tangential intersection")
        data["summary"] = {"passed": False, "reasons": reasons}
        return SolvableLineCertificate(data)

    data["quartic"]["disc_valuation_3"] = _frac_val(disc, 3)
    data["quartic"]["disc_valuation_5"] = _frac_val(disc, 5)
    data["galois"] = _galois_section(quartic)

    want_real = config.target_at("real") is not None
    want_3 = config.target_at(3) is not None
    want_5 = config.target_at(5) is not None

    count = real_root_count(quartic)
    data["real"] = {"root_count": count, "required": want_real}

    for p, key, wanted in ((3, "local_3", want_3), (5, "local_5", want_5)):
        section, _ = _local_section(line, quartic, model, config, p)
        section["required"] = wanted
        data[key] = section

    checks = {}
    if want_real:
        checks["real_four_roots"] = _gate_real(data["real"])
    if want_3:
        checks["unramified_at_3"] = _gate_unramified(data["local_3"])
    if want_5:
        checks["ordinary_at_5"] = _gate_ordinary(data["local_5"])
    for name, ok in checks.items():
        if not ok:
            reasons.append(f"check failed: {name}")
    if not checks:
        reasons.append("no local targets were requested")
    data["summary"] = {
        "passed": bool(checks) and all(checks.values()),
        "checks": checks,
        "reasons": reasons,
    }
    return SolvableLineCertificate(data)


def derive_chart_params(line: Line, config: SearchConfig, model: SurfaceModel):
    """Invert the configured line chart on a given line, if possible.

    Returns (kind, params) where params is None when the line is not in
    the chart's image (certificates then record the line by its rows
    alone).
    """
    if config.twist == "char3-x":
        try:
            return "labc", labc_params_of_line(line)
        except HmsError:
            return "labc", None
    if config.seed_point is None:
        return None, None
    try:
        chart = TangentConeChart(model, list(config.seed_point))
        return "tangent-cone", chart.params_of(line)
    except HmsError:
        return "tangent-cone", None


# -- the search itself ---------------------------------------------------


def build_model(config: SearchConfig) -> SurfaceModel:
    try:
        twist = twist_by_name(
            config.twist, lambda1=config.lambda1, lambda2=config.lambda2
        )
        return twisted_equations(twist)
    except HmsError as exc:
        raise ConfigError(f"cannot build the twisted model: {exc}")


def _line_chart(config: SearchConfig, model: SurfaceModel):
    if config.twist == "char3-x":
        return "labc", lambda a, b, c: labc_line(a, b, c)
    if config.seed_point is None:
        raise ConfigError("this twist needs a seed_point for the line chart")
    try:
        chart = TangentConeChart(model, list(config.seed_point))
    except (NotOnSurfaceError, SingularPointError, ConicPointError) as exc:
        raise ConfigError(f"seed_point does not give a line chart: {exc}")
    return "tangent-cone", chart.line_at


def _combined_parameters(config: SearchConfig):
    t_real = config.target_at("real")
    t3 = config.target_at(3)
    t5 = config.target_at(5)
    anchor_target = t_real or t3 or t5
    if anchor_target is None:
        raise ConfigError("the search needs at least one target")
    reps, moduli = [], []
    for i in range(3):
        rep, m = crt_parameter(
            residue3=t3.params[i] if t3 else None,
            residue5=t5.params[i] if t5 else None,
            k3=config.k3,
            k5=config.k5,
            anchor=anchor_target.params[i],
        )
        reps.append(rep)
        moduli.append(m)
    return tuple(reps), tuple(moduli)


def find_lines(config: SearchConfig, max_results: int = 1):
    """Search the congruence class for lines passing every target gate.

    Returns a list of (Line, SolvableLineCertificate) pairs, at most
    max_results long, in deterministic enumeration order.  Raises
    SearchExhausted (with rejection statistics) when the height bound
    is reached first.
    """
    model = build_model(config)
    chart_kind, chart_fn = _line_chart(config, model)
    reps, moduli = _combined_parameters(config)
    stats = {
        "candidates": 0,
        "chart_failures": 0,
        "off_surface": 0,
        "degenerate": 0,
        "zero_discriminant": 0,
        "duplicates": 0,
        "precision_failures": 0,
        "gate_failures": 0,
    }
    results = []
    seen = set()
    for params in _candidate_params(reps, moduli, config.height_bound):
        stats["candidates"] += 1
        try:
            line = chart_fn(*params)
        except (
            DegenerateLineError,
            SingularPointError,
            ConicPointError,
            NotOnSurfaceError,
            HmsError,
        ):
            stats["chart_failures"] += 1
            continue
        key = line.primitive_rows()
        if key in seen:
            stats["duplicates"] += 1
            continue
        seen.add(key)
        try:
            cert = certify_line(
                line, model, config, chart_params=params, chart_kind=chart_kind
            )
        except NotOnSurfaceError:
            stats["off_surface"] += 1
            continue
        except DegenerateLineError:
            stats["degenerate"] += 1
            continue
        except PrecisionError:
            stats["precision_failures"] += 1
            continue
        except RegimeError:
            stats["gate_failures"] += 1
            continue
        if cert.data["quartic"]["discriminant"] == "0":
            stats["zero_discriminant"] += 1
            continue
        if cert.passed:
            results.append((line, cert))
            if len(results) >= max_results:
                return results
        else:
            stats["gate_failures"] += 1
    if results:
        return results
    raise SearchExhausted(
        "no line passed every gate within the height bound", stats=stats
    )
