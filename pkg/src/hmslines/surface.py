"""Twisted models of the degree-8 threefold sigma1 = sigma2 = sigma4 = 0.

The untwisted model lives in P^5 with coordinates s0..s5 and is cut out
by the elementary symmetric polynomials sigma1, sigma2, sigma4.  A twist
is an invertible linear change of coordinates s = M y whose composed
equations have rational coefficients; `twisted_equations` performs the
substitution, certifies rationality, and clears denominators.

The sigma invariants of a point (computed in s-coordinates) feed the
modular-form values phi2, chi6, chi10 and the two scale-invariant
ordinarity ratios tested by `ordinarity_from_profile`.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadLocusError, HmsError, PrecisionError, RationalityError
from .linalg import invert, mat_mul, mat_vec
from .mpoly import SparsePoly, coeff_is_zero, compose_linear, elementary_symmetric
from .padics import IndeterminateValuation, PadicApprox, lift_to_padic
from .scalars import CycloElt, OMEGA, SQRT_MINUS_3, valuation_of_rational


def _conjugate_coeff(c):
    if isinstance(c, CycloElt):
        return c.conjugate()
    return c


def _rational_coeff(c):
    if isinstance(c, CycloElt):
        return c.rational_part()
    return Fraction(c)


class TwistData:
    """An invertible 6x6 change of coordinates s_i = sum_j matrix[i][j] y_j.

    `lambda1`, `lambda2` record the scaling parameters used to build the
    matrix (both 1 when the twist has none) and `label` names the family.
    """

    def __init__(self, matrix, lambda1=Fraction(1), lambda2=Fraction(1), label="custom"):
        matrix = [list(row) for row in matrix]
        if len(matrix) != 6 or any(len(row) != 6 for row in matrix):
            raise HmsError("twist matrix must be 6x6")
        self.matrix = matrix
        self.inverse = invert(matrix)
        self.lambda1 = Fraction(lambda1)
        self.lambda2 = Fraction(lambda2)
        self.label = label

    def __repr__(self):
        return f"TwistData({self.label!r}, lambda1={self.lambda1}, lambda2={self.lambda2})"


def identity_twist() -> TwistData:
    rows = [[Fraction(int(i == j)) for j in range(6)] for i in range(6)]
    return TwistData(rows, label="identity")


def rho0_twist() -> TwistData:
    """Archimedean twist: pairs of conjugate coordinates over Q(sqrt(-3))."""
    r = SQRT_MINUS_3
    z = Fraction(0)
    one = Fraction(1)
    rows = [
        [one, r, z, z, z, z],
        [one, -r, z, z, z, z],
        [z, z, one, r, z, z],
        [z, z, one, -r, z, z],
        [z, z, z, z, one, z],
        [z, z, z, z, z, one],
    ]
    return TwistData(rows, label="rho0-archimedean")


def char3_twist(lambda1, lambda2) -> TwistData:
    """Cube-root-of-unity averaging twist with two scaling parameters.

    Conjugation swaps the first two and the middle two rows, so the
    composed equations are rational for every nonzero rational lambda.
    """
    lambda1 = Fraction(lambda1)
    lambda2 = Fraction(lambda2)
    if lambda1 == 0 or lambda2 == 0:
        raise HmsError("twist parameters must be nonzero")
    w = OMEGA
    w2 = w * w
    t = Fraction(1, 3)
    z = Fraction(0)
    S = [
        [w2 * t, w * t, z, z, t, z],
        [w * t, w2 * t, z, z, t, z],
        [z, z, w2 * t, w * t, z, t],
        [z, z, w * t, w2 * t, z, t],
        [t, t, z, z, t, z],
        [z, z, t, t, z, t],
    ]
    diag = [lambda1, 1 / lambda1, lambda2, 1 / lambda2, Fraction(1), Fraction(1)]
    D = [[diag[i] if i == j else Fraction(0) for j in range(6)] for i in range(6)]
    return TwistData(mat_mul(S, D), lambda1, lambda2, label="char3-x")


_VAR_PREFIXES = {"identity": "s", "rho0-archimedean": "t", "char3-x": "x"}

BUILTIN_TWISTS = ("identity", "rho0-archimedean", "char3-x")


def twist_by_name(name: str, lambda1=Fraction(1), lambda2=Fraction(1)) -> TwistData:
    if name == "identity":
        return identity_twist()
    if name == "rho0-archimedean":
        return rho0_twist()
    if name == "char3-x":
        return char3_twist(lambda1, lambda2)
    raise HmsError(f"unknown twist {name!r}; built-ins: {', '.join(BUILTIN_TWISTS)}")


@dataclass
class SurfaceModel:
    """Equations of one twisted model, with denominators cleared.

    forms[k] is the integral, content-1 polynomial proportional to
    sigma_k composed with the twist, for every k from 1 to 6; scales[k]
    restores the symmetric function exactly: sigma_k(M y) =
    scales[k] * forms[k](y).  The model itself is cut out by q1 = q2 =
    q4 = 0.
    """

    twist: TwistData
    forms: dict
    scales: dict
    var_prefix: str

    @property
    def q1(self) -> SparsePoly:
        return self.forms[1]

    @property
    def q2(self) -> SparsePoly:
        return self.forms[2]

    @property
    def q4(self) -> SparsePoly:
        return self.forms[4]

    def equations(self):
        return (self.q1, self.q2, self.q4)

    def contains_point(self, pt) -> bool:
        return all(coeff_is_zero(q.evaluate(pt)) for q in self.equations())

    def to_s_coordinates(self, pt):
        """Map a point of this model to the untwisted s-coordinates."""
        return mat_vec(self.twist.matrix, pt)

    def profile_at(self, pt) -> "SigmaProfile":
        """Sigma invariants of a point of this model.

        Evaluates the composed (rational) symmetric forms directly, so
        the coordinates may live in any scalar ring whose elements
        multiply with Fractions.  Values come out rational for rational
        points even when the twist matrix itself is irrational.
        """
        values = [self.scales[k] * self.forms[k].evaluate(pt) for k in range(1, 7)]
        return SigmaProfile(tuple(values))


def twisted_equations(twist: TwistData) -> SurfaceModel:
    """Compose every sigma_k with the twist and clear denominators.

    Raises RationalityError unless every composed coefficient is fixed by
    conjugation, i.e. genuinely rational.
    """
    forms = {}
    scales = {}
    for k in range(1, 7):
        raw = compose_linear(elementary_symmetric(k, 6), twist.matrix)
        conj = raw.map_coeffs(_conjugate_coeff)
        if conj != raw:
            raise RationalityError(
                f"sigma_{k} of the twisted model is not conjugation-invariant"
            )
        scale, poly = raw.map_coeffs(_rational_coeff).canonical()
        forms[k] = poly
        scales[k] = scale
    return SurfaceModel(
        twist=twist,
        forms=forms,
        scales=scales,
        var_prefix=_VAR_PREFIXES.get(twist.label, "y"),
    )


@dataclass(frozen=True)
class SigmaProfile:
    """Values sigma_1..sigma_6 at a point, plus D = sigma_3^2 - 4 sigma_6."""

    values: tuple

    def sigma(self, k: int):
        if not 1 <= k <= 6:
            raise HmsError("sigma index out of range")
        return self.values[k - 1]

    @property
    def D(self):
        s3 = self.values[2]
        s6 = self.values[5]
        return s3 * s3 - s6 * 4


def _coerce_point(pt):
    pt = list(pt)
    if len(pt) != 6:
        raise HmsError("a point needs 6 coordinates")
    padic = [c for c in pt if isinstance(c, PadicApprox)]
    if padic:
        p = padic[0].p
        bound = min(c.abs_precision for c in padic)
        out = []
        for c in pt:
            if isinstance(c, PadicApprox):
                out.append(c)
            elif coeff_is_zero(c):
                out.append(PadicApprox.zero_at(p, bound))
            else:
                out.append(lift_to_padic(c, p, max(bound, 1)))
        return out
    return pt


def sigma_profile(pt) -> SigmaProfile:
    """Elementary symmetric functions of the six s-coordinates of a point."""
    pt = _coerce_point(pt)
    if all(
        c.is_zero_at_precision if isinstance(c, PadicApprox) else coeff_is_zero(c)
        for c in pt
    ):
        if isinstance(pt[0], PadicApprox):
            raise PrecisionError("all coordinates vanish at the working precision")
        raise HmsError("the zero vector is not a projective point")
    es = [1, 0, 0, 0, 0, 0, 0]
    for s in pt:
        for j in range(6, 0, -1):
            es[j] = s * es[j - 1] + es[j]
    return SigmaProfile(tuple(es[1:]))


@dataclass(frozen=True)
class ModularFormValues:
    """phi2, chi6, chi10 at a point together with the two test ratios.

    The ratios phi2^3/chi6 and phi2^5/chi10 are invariant under scaling
    the point, which is what makes them usable on projective data.
    """

    phi2: object
    chi6: object
    chi10: object
    phi2_cubed_over_chi6: object
    phi2_fifth_over_chi10: object


def _require_invertible(value, name):
    if isinstance(value, PadicApprox):
        if value.is_zero_at_precision:
            raise PrecisionError(
                f"{name} is zero at the working precision; cannot invert",
                needed=value.abs_precision + 1,
            )
        return
    if coeff_is_zero(value):
        if name == "sigma_5":
            raise BadLocusError(
                "cusp-form vanishing: point in bad locus for this test"
            )
        raise BadLocusError(f"{name} vanishes; the requested ratio is undefined")


def modular_form_values(profile: SigmaProfile) -> ModularFormValues:
    """Modular-form values from a sigma profile.

    chi6 = sigma_3, chi10 = -sigma_5/3 and phi2 = -3 D / sigma_5.  The
    point must avoid the chi10 = 0 locus (sigma_5 nonzero); the chi6
    ratio additionally needs sigma_3 nonzero.
    """
    s3 = profile.sigma(3)
    s5 = profile.sigma(5)
    D = profile.D
    _require_invertible(s5, "sigma_5")
    _require_invertible(s3, "sigma_3")
    phi2 = (D / s5) * -3
    chi6 = s3
    chi10 = s5 * Fraction(-1, 3)
    return ModularFormValues(
        phi2=phi2,
        chi6=chi6,
        chi10=chi10,
        phi2_cubed_over_chi6=phi2 ** 3 / chi6,
        phi2_fifth_over_chi10=phi2 ** 5 / chi10,
    )


@dataclass(frozen=True)
class OrdinarityCertificate:
    """Outcome of the two-ratio ordinarity test at a prime p.

    u1 = D^5 / sigma_5^6 and u2 = D^3 / (sigma_5^3 sigma_3); the test
    passes when both have valuation <= 0.  A valuation of None means the
    ratio vanishes exactly (valuation +infinity), a certified failure.
    """

    p: int
    u1: object
    u2: object
    v_u1: object
    v_u2: object
    passed: bool


def _valuation_le_zero(x, p, name):
    """Return (valuation, v <= 0) or raise when undecidable."""
    if isinstance(x, PadicApprox):
        v = x.valuation()
        if isinstance(v, IndeterminateValuation):
            if v.lower_bound > 0:
                return v, False
            raise PrecisionError(
                f"valuation of {name} is indeterminate at the working precision",
                needed=x.abs_precision + 1,
            )
        return v, v <= 0
    x = Fraction(x)
    if x == 0:
        return None, False
    v = valuation_of_rational(x, p)
    return v, v <= 0


def ordinarity_from_profile(profile: SigmaProfile, p: int = 5) -> OrdinarityCertificate:
    """Decide ordinarity at p from exact or p-adic sigma values."""
    s3 = profile.sigma(3)
    s5 = profile.sigma(5)
    D = profile.D
    if isinstance(s5, PadicApprox):
        if s5.is_zero_at_precision:
            raise PrecisionError(
                "sigma_5 is zero at the working precision; cannot invert",
                needed=s5.abs_precision + 1,
            )
        if s3.is_zero_at_precision:
            raise PrecisionError(
                "sigma_3 is zero at the working precision; cannot invert",
                needed=s3.abs_precision + 1,
            )
        u1 = D ** 5 / s5 ** 6
        u2 = D ** 3 / (s5 ** 3 * s3)
    else:
        s3 = Fraction(s3)
        s5 = Fraction(s5)
        D = Fraction(D)
        if s5 == 0:
            raise BadLocusError(
                "cusp-form vanishing: point in bad locus for this test"
            )
        if s3 == 0:
            raise BadLocusError("sigma_3 vanishes; ordinarity ratio undefined")
        u1 = D ** 5 / s5 ** 6
        u2 = D ** 3 / (s5 ** 3 * s3)
    v1, ok1 = _valuation_le_zero(u1, p, "u1")
    v2, ok2 = _valuation_le_zero(u2, p, "u2")
    return OrdinarityCertificate(
        p=p, u1=u1, u2=u2, v_u1=v1, v_u2=v2, passed=ok1 and ok2
    )


def ordinarity_certificate(pt, p: int = 5) -> OrdinarityCertificate:
    """Ordinarity test at the sigma profile of a point (s-coordinates)."""
    return ordinarity_from_profile(sigma_profile(pt), p)


def curve_V_avoidance(profile: SigmaProfile) -> bool:
    """Certify D != 0 at the point; False only on an exact zero."""
    D = profile.D
    if isinstance(D, PadicApprox):
        if D.is_zero_at_precision:
            raise PrecisionError(
                "D is zero at the working precision; cannot certify avoidance",
                needed=D.abs_precision + 1,
            )
        return True
    return not coeff_is_zero(D)
