"""Lines on the quadric part of a twisted model and their invariants.

A line contained in {q1 = 0, q2 = 0} meets the degree-4 locus q4 = 0 in
the four roots of a binary quartic, computed by `quartic_of_line`.  Two
rational charts produce such lines:

* `TangentConeChart` works on any model.  At a smooth rational seed
  point the intersection of the quadric with its tangent hyperplane is
  a cone over a conic; rational points of that conic are the ruling
  directions, and walking along a ruling and repeating the construction
  parametrizes a three-dimensional family of lines by (a, b, c).

* `labc_line` is the explicit family available on the cube-root twist
  model, where the same three parameters appear polynomially in a pair
  of spanning points.

The character-3 helpers (`char3_leading_profile`, `parity_admissible`,
`cusp_proximity`) quantify the 3-adic behaviour of the labc family.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    ConicPointError,
    DegenerateLineError,
    HmsError,
    NotOnSurfaceError,
    PrecisionError,
    RegimeError,
    SingularPointError,
)
from .linalg import mat_vec, nullspace, rref, solve
from .mpoly import SparsePoly, coeff_is_zero, compose_linear, elementary_symmetric, restrict_to_basis
from .padics import IndeterminateValuation, PadicApprox, UElt
from .quartics import BinaryQuartic
from .scalars import valuation_of_rational
from .surface import SurfaceModel, char3_twist, twisted_equations


def primitive_vector(v):
    """Scale a rational vector to integers with content 1, first nonzero > 0."""
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise HmsError("cannot normalize the zero vector")
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


class Line:
    """A projective line in P^5, stored by its reduced row echelon basis.

    Two Line objects compare equal exactly when they are the same
    subspace.  The basis rows double as a parametrization: the point at
    [t : u] is t * rows[0] + u * rows[1].
    """

    def __init__(self, basis):
        basis = [list(row) for row in basis]
        if len(basis) != 2 or any(len(row) != 6 for row in basis):
            raise HmsError("a line needs two spanning vectors of length 6")
        R, pivots = rref(basis)
        if len(pivots) < 2:
            raise DegenerateLineError("spanning vectors are proportional")
        self.rows = (tuple(R[0]), tuple(R[1]))
        self.pivots = tuple(pivots)

    @property
    def basis(self):
        return self.rows

    def point_at(self, t, u):
        a, b = self.rows
        return [ai * t + bi * u for ai, bi in zip(a, b)]

    def contains(self, pt) -> bool:
        _, pivots = rref([list(self.rows[0]), list(self.rows[1]), list(pt)])
        return len(pivots) == 2

    def primitive_rows(self):
        return tuple(primitive_vector(row) for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, Line) and self.rows == other.rows

    def __repr__(self):
        return f"Line{self.rows!r}"


def line_through(p, q) -> Line:
    return Line([p, q])


def lies_in(line: Line, f: SparsePoly) -> bool:
    """Whether the hypersurface f = 0 contains the line."""
    return restrict_to_basis(f, line.rows[0], line.rows[1]).is_zero


def quartic_of_line(line: Line, model: SurfaceModel) -> BinaryQuartic:
    """The binary quartic cutting out line-meets-(q4 = 0).

    The line must lie in both quadric equations of the model; its four
    intersection points with the degree-8 surface are the roots of the
    returned form in the [t : u] parametrization of `point_at`.
    """
    P, Q = line.rows
    for q in (model.q1, model.q2):
        if not restrict_to_basis(q, P, Q).is_zero:
            raise NotOnSurfaceError(
                "line does not lie in the quadric part of the model"
            )
    return BinaryQuartic.from_sparse(restrict_to_basis(model.q4, P, Q))


# -- tangent cone ------------------------------------------------------


def gram_matrix(q: SparsePoly):
    """Doubled Gram matrix G of a quadratic form: G[i][j] = B(e_i, e_j)
    for the polar form B(u, v) = q(u + v) - q(u) - q(v).  No halving, so
    the matrix is integral whenever q is; B(x, x) = 2 q(x)."""
    n = q.nvars
    G = [[Fraction(0)] * n for _ in range(n)]
    for exp, c in q.terms.items():
        idx = [i for i, e in enumerate(exp) for _ in range(e)]
        if len(idx) != 2:
            raise HmsError("gram_matrix needs a homogeneous quadratic")
        i, j = idx
        G[i][j] = G[i][j] + c
        G[j][i] = G[j][i] + c
    return G


def linear_row(f: SparsePoly):
    """Coefficient vector of a linear form."""
    row = [Fraction(0)] * f.nvars
    for exp, c in f.terms.items():
        if sum(exp) != 1:
            raise HmsError("linear_row needs a homogeneous linear form")
        row[exp.index(1)] = Fraction(c)
    return row


def restrict_to_span(f: SparsePoly, basis) -> SparsePoly:
    """f composed with (y_0, .., y_{k-1}) -> sum y_j basis[j]."""
    k = len(basis)
    images = []
    for i in range(f.nvars):
        terms = {}
        for j in range(k):
            c = basis[j][i]
            if not coeff_is_zero(c):
                exp = [0] * k
                exp[j] = 1
                terms[tuple(exp)] = c
        images.append(SparsePoly(k, terms))
    return f.substitute(images)


class _ConeFrame:
    """The tangent-cone data of the quadric pencil at a smooth point.

    V is the 4-dimensional subspace cut out by the hyperplane q1 and
    the polar hyperplane of x; it contains x, and U is a complement of
    x inside V.  q2 restricted to V descends to a conic on U."""

    def __init__(self, model: SurfaceModel, x):
        x = [Fraction(c) for c in x]
        if not (
            coeff_is_zero(model.q1.evaluate(x))
            and coeff_is_zero(model.q2.evaluate(x))
        ):
            raise NotOnSurfaceError("tangent cone needs a point on both quadrics")
        self.model = model
        self.x = x
        self.gram = gram_matrix(model.q2)
        rows = [linear_row(model.q1), mat_vec(self.gram, x)]
        _, pivots = rref(rows)
        if len(pivots) < 2:
            raise SingularPointError(
                "polar hyperplane degenerates; the point is singular on the pencil"
            )
        self.V = nullspace(rows)
        if len(self.V) != 4:
            raise SingularPointError("tangent space has the wrong dimension")
        A = [[self.V[j][i] for j in range(4)] for i in range(6)]
        lam = solve(A, x)
        if lam is None:
            raise HmsError("point escaped its own tangent space")
        self._A = A
        self._lam = lam
        self._jstar = next(j for j in range(4) if lam[j] != 0)
        self.U = [self.V[j] for j in range(4) if j != self._jstar]
        self.conic = restrict_to_span(model.q2, self.U)

    def project(self, w):
        """Conic coordinates of a cone vector w, i.e. w mod x inside V."""
        mu = solve(self._A, [Fraction(c) for c in w])
        if mu is None:
            raise HmsError("vector is not in the tangent space")
        alpha = mu[self._jstar] / self._lam[self._jstar]
        coords = [
            mu[j] - alpha * self._lam[j] for j in range(4) if j != self._jstar
        ]
        if all(c == 0 for c in coords):
            raise DegenerateLineError("direction is proportional to the vertex")
        return coords

    def ambient(self, coords):
        out = [Fraction(0)] * 6
        for c, u in zip(coords, self.U):
            for i in range(6):
                out[i] = out[i] + c * u[i]
        return out


def _squarefree_part(n: int) -> int:
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return sign * out * n


def _congruence_diagonalize(G):
    """Diagonal entries of P^T G P for a rational symmetric 3x3 G."""
    n = len(G)
    G = [[Fraction(x) for x in row] for row in G]
    for k in range(n):
        if G[k][k] == 0:
            swap = next((l for l in range(k + 1, n) if G[l][l] != 0), None)
            if swap is not None:
                for row in G:
                    row[k], row[swap] = row[swap], row[k]
                G[k], G[swap] = G[swap], G[k]
            else:
                off = next(
                    (l for l in range(k + 1, n) if G[k][l] != 0), None
                )
                if off is None:
                    continue
                for row in G:
                    row[k] = row[k] + row[off]
                for j in range(n):
                    G[k][j] = G[k][j] + G[off][j]
        if G[k][k] == 0:
            continue
        for l in range(k + 1, n):
            f = G[k][l] / G[k][k]
            if f == 0:
                continue
            for row in G:
                row[l] = row[l] - f * row[k]
            for j in range(n):
                G[l][j] = G[l][j] - f * G[k][j]
    return [G[i][i] for i in range(n)]


def rational_conic_point(conic: SparsePoly, height: int = 24):
    """Deterministic small-height search for a rational point on a conic.

    Scans primitive integer triples by increasing sup-norm.  When the
    scan fails, the conic is diagonalized: a zero diagonal entry yields
    a point after all, and otherwise a ConicPointError reports the
    squarefree discriminant of a quadratic extension that would work.
    """
    if conic.nvars != 3:
        raise HmsError("conic must be a ternary form")
    for h in range(1, height + 1):
        for x in range(-h, h + 1):
            for y in range(-h, h + 1):
                for z in range(-h, h + 1):
                    if max(abs(x), abs(y), abs(z)) != h:
                        continue
                    if gcd(gcd(abs(x), abs(y)), abs(z)) != 1:
                        continue
                    if coeff_is_zero(conic.evaluate([x, y, z])):
                        return [Fraction(x), Fraction(y), Fraction(z)]
    diag = _congruence_diagonalize(gram_matrix(conic))
    nonzero = [d for d in diag if d != 0]
    if len(nonzero) < 3:
        raise ConicPointError(
            "degenerate conic escaped the height search; raise the height bound"
        )
    d1, d2 = nonzero[0], nonzero[1]
    hint = _squarefree_part((-d1 * d2).numerator * (-d1 * d2).denominator)
    raise ConicPointError(
        f"no rational point of height <= {height} on the tangent conic",
        extension_disc=hint,
    )


class ConicParam:
    """Chord parametrization of a conic through a known rational point.

    With c0 on the conic, i its first nonzero coordinate and j1 < j2
    the other two, the point at [r : s] is Q(e) c0 - B(c0, e) e for
    e = -r e_{j1} + s e_{j2}.  Every conic point has a parameter; the
    base point c0 itself corresponds to the tangent direction."""

    def __init__(self, conic: SparsePoly, c0):
        self.conic = conic
        self.c0 = [Fraction(c) for c in c0]
        if not coeff_is_zero(conic.evaluate(self.c0)):
            raise HmsError("base point is not on the conic")
        self.gram = gram_matrix(conic)
        self.i = next(k for k in range(3) if self.c0[k] != 0)
        self.j1, self.j2 = [k for k in range(3) if k != self.i]

    def point(self, r, s):
        e = [Fraction(0)] * 3
        e[self.j1] = Fraction(-r)
        e[self.j2] = Fraction(s)
        qe = self.conic.evaluate(e)
        be = sum(v * ei for v, ei in zip(mat_vec(self.gram, self.c0), e))
        out = [qe * c - be * ei for c, ei in zip(self.c0, e)]
        if all(x == 0 for x in out):
            raise DegenerateLineError("conic parametrization collapsed")
        return out

    def param_of(self, w):
        """Inverse of `point` up to scale; w must be a conic point != c0."""
        w = [Fraction(c) for c in w]
        shift = w[self.i] / self.c0[self.i]
        e = [wc - shift * cc for wc, cc in zip(w, self.c0)]
        r, s = -e[self.j1], e[self.j2]
        if r == 0 and s == 0:
            raise HmsError("the base point has no chord parameter")
        return r, s

    def tangent_parameter(self):
        """The chord parameter whose point is c0 itself.

        The chord [r : s] returns a multiple of c0 exactly when its
        direction is polar-orthogonal to c0; that linear condition pins
        down one parameter."""
        bc0 = mat_vec(self.gram, self.c0)
        r, s = bc0[self.j2], bc0[self.j1]
        if r == 0 and s == 0:
            raise HmsError("base point is singular on the conic")
        return r, s


def tangent_cone_lines(model: SurfaceModel, x, r, s, conic_point=None) -> Line:
    """The ruling line of the tangent cone at x with chord parameter [r:s].

    `conic_point` may supply a known rational ruling direction; without
    it a deterministic small-height search runs first."""
    frame = _ConeFrame(model, x)
    if conic_point is not None:
        c0 = frame.project(conic_point)
    else:
        c0 = rational_conic_point(frame.conic)
    param = ConicParam(frame.conic, c0)
    w = frame.ambient(param.point(r, s))
    return Line([frame.x, w])


class TangentConeChart:
    """Three-parameter rational chart (a, b, c) -> line in {q1 = q2 = 0}.

    w_a is the primitive ruling direction with chord parameter [a : 1]
    at the seed; x' = seed + b * w_a walks along that ruling, and the
    line is the ruling of the cone at x' with chord parameter [c : 1],
    taken through the conic point inherited from w_a.  `params_of`
    inverts the chart at line level: away from b = 0 it recovers the
    exact parameters, while lines through the seed (where the map
    (a, c) -> ruling collapses a dimension) get one canonical
    preimage."""

    def __init__(self, model: SurfaceModel, seed, height: int = 24):
        self.model = model
        self.seed = [Fraction(c) for c in primitive_vector(seed)]
        self.frame0 = _ConeFrame(model, self.seed)
        self.c0 = rational_conic_point(self.frame0.conic, height)
        self.param0 = ConicParam(self.frame0.conic, self.c0)

    def direction(self, a):
        w = self.frame0.ambient(self.param0.point(a, 1))
        return [Fraction(c) for c in primitive_vector(w)]

    def line_at(self, a, b, c) -> Line:
        w = self.direction(a)
        b = Fraction(b)
        if b == 0:
            frame = self.frame0
            x1 = self.seed
        else:
            x1 = [xi + b * wi for xi, wi in zip(self.seed, w)]
            frame = _ConeFrame(self.model, x1)
        base = frame.project(w)
        param = ConicParam(frame.conic, base)
        y = frame.ambient(param.point(c, 1))
        return Line([x1, y])

    def params_of(self, line: Line):
        """Chart coordinates of a line in the quadric pencil.

        Raises when the line sits outside the chart (a parameter lands
        at infinity, or the cone intersection degenerates)."""
        P, Q = line.rows
        bx = mat_vec(self.frame0.gram, self.seed)
        bp = sum(v * c for v, c in zip(bx, P))
        bq = sum(v * c for v, c in zip(bx, Q))
        if bp == 0 and bq == 0:
            y0 = list(P)
        else:
            y0 = [Fraction(bq) * pi - Fraction(bp) * qi for pi, qi in zip(P, Q)]
        if all(c == 0 for c in y0):
            raise HmsError("line misses the tangent cone rationally")
        through_seed = line.contains(self.seed)
        if through_seed:
            # the line is itself a ruling at the seed; any other ruling
            # may serve as the a-direction, so pick one deterministically
            b = Fraction(0)
            other = list(Q) if self._independent(P, self.seed) is False else list(P)
            z = self.frame0.project(other)
            a = self._ruling_parameter(self._companion_base(z))
            w = self.direction(a)
            frame = self.frame0
            x1 = self.seed
        else:
            a = self._ruling_parameter(self.frame0.project(y0))
            w = self.direction(a)
            A = [[self.seed[i], w[i]] for i in range(6)]
            mu = solve(A, y0)
            if mu is None or mu[0] == 0:
                raise HmsError("line meets the cone only along the base conic")
            b = mu[1] / mu[0]
            if b == 0:
                raise HmsError("intersection point equals the seed unexpectedly")
            x1 = [xi + b * wi for xi, wi in zip(self.seed, w)]
            frame = _ConeFrame(self.model, x1)
        base = frame.project(w)
        param = ConicParam(frame.conic, base)
        zdir = list(Q) if self._independent(P, x1) is False else list(P)
        r2, s2 = param.param_of(frame.project(zdir))
        if s2 == 0:
            raise HmsError("line parameter at infinity; not in this chart")
        return a, b, r2 / s2

    def _ruling_parameter(self, u):
        """The a with ruling direction u; the base ruling itself is
        recovered through the tangent chord."""
        try:
            r, s = self.param0.param_of(u)
        except HmsError:
            r, s = self.param0.tangent_parameter()
        if s == 0:
            raise HmsError("ruling parameter at infinity; not in this chart")
        return r / s

    def _companion_base(self, z):
        """A conic point joined to z by a chord, distinct from z.

        Used to invert lines through the seed: the returned point plays
        the a-ruling, and z becomes its chord parameter c."""
        chord = ConicParam(self.frame0.conic, z)
        for r0, s0 in ((0, 1), (1, 1), (-1, 1), (2, 1), (1, 0), (1, 2), (3, 1)):
            try:
                cand = chord.point(r0, s0)
            except DegenerateLineError:
                continue
            _, pivots = rref([list(cand), list(z)])
            if len(pivots) == 2:
                return cand
        raise HmsError("ruling admits no companion chord in this chart")

    @staticmethod
    def _independent(v, x) -> bool:
        _, pivots = rref([list(v), list(x)])
        return len(pivots) == 2


# -- the explicit three-parameter family on the cube-root twist --------


def labc_line(a, b, c) -> Line:
    """The line with spanning points

    P = (-b^2, 1, 0, -(a + b c), -b, b),  Q = (a - b c, 0, 1, -c^2, -c, c).

    It lies in both quadrics of the cube-root twist model for every
    a, b, c (including symbolic values)."""
    P = (-b * b, 1, 0, -(a + b * c), -b, b)
    Q = (a - b * c, 0, 1, -c * c, -c, c)
    return Line([P, Q])


def labc_params_of_line(line: Line):
    """Recover (a, b, c) from a member of the labc family.

    Raises HmsError when the line does not project isomorphically to
    the (x1, x2) coordinate plane or does not match the family shape."""
    rows = [list(line.rows[0]), list(line.rows[1])]
    M = [[rows[0][1], rows[1][1]], [rows[0][2], rows[1][2]]]
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if det == 0:
        raise HmsError("line is degenerate over the (x1, x2) plane")
    # combos with (x1, x2) = (1, 0) and (0, 1)
    inv = [[M[1][1] / det, -M[0][1] / det], [-M[1][0] / det, M[0][0] / det]]
    P = [inv[0][0] * rows[0][i] + inv[1][0] * rows[1][i] for i in range(6)]
    Q = [inv[0][1] * rows[0][i] + inv[1][1] * rows[1][i] for i in range(6)]
    b = P[5]
    c = Q[5]
    a = Q[0] + b * c
    if Line([(-b * b, 1, 0, -(a + b * c), -b, b), (a - b * c, 0, 1, -c * c, -c, c)]) != line:
        raise HmsError("line is not in the labc family")
    return a, b, c


def char3_quartic_display(lambda1, lambda2) -> SparsePoly:
    """The quartic of the cube-root twist model, scaled so that the
    monomial x0^3 x5 has coefficient lambda1^3 (i.e. 27 times the
    composed symmetric function)."""
    tw = char3_twist(lambda1, lambda2)
    raw = compose_linear(elementary_symmetric(4, 6), tw.matrix)
    rational = raw.map_coeffs(
        lambda z: z.rational_part() if hasattr(z, "rational_part") else Fraction(z)
    )
    return rational * 27


@dataclass(frozen=True)
class Char3Profile:
    """Coefficients of the labc-family quartic as polynomials in (a, b, c).

    coeffs[i] multiplies x1^i x2^(4-i) in the restriction of the scaled
    quartic to the line L_{a,b,c}."""

    lambda1: Fraction
    lambda2: Fraction
    coeffs: tuple

    def coefficient_valuations(self, alpha: int, beta: int, gamma: int, p: int = 3):
        """3-adic valuations of the five coefficients in the monomial
        regime v(a) = alpha, v(b) = beta, v(c) = gamma.

        Each coefficient valuation is certified only when a single
        monomial strictly dominates; a tie raises RegimeError."""
        out = []
        for k, poly in enumerate(self.coeffs):
            if poly.is_zero:
                out.append(None)
                continue
            best = None
            tie = False
            for exp, coeff in poly.terms.items():
                v = (
                    valuation_of_rational(coeff, p)
                    + alpha * exp[0]
                    + beta * exp[1]
                    + gamma * exp[2]
                )
                if best is None or v < best:
                    best, tie = v, False
                elif v == best:
                    tie = True
            if tie:
                raise RegimeError(
                    f"coefficient {k}: two monomials share the minimal "
                    f"valuation {best}; regime (alpha, beta, gamma) = "
                    f"({alpha}, {beta}, {gamma}) is too small to separate them"
                )
            out.append(best)
        return tuple(out)


def char3_leading_profile(lambda1, lambda2) -> Char3Profile:
    """Symbolic restriction of the scaled quartic to the labc family."""
    quartic = char3_quartic_display(lambda1, lambda2)
    one = SparsePoly.constant(Fraction(1), 3)
    zero = SparsePoly(3, {})
    a = SparsePoly(3, {(1, 0, 0): Fraction(1)})
    b = SparsePoly(3, {(0, 1, 0): Fraction(1)})
    c = SparsePoly(3, {(0, 0, 1): Fraction(1)})
    P = (zero - b * b, one, zero, zero - (a + b * c), zero - b, b)
    Q = (a - b * c, zero, one, zero - c * c, zero - c, c)
    r = restrict_to_basis(quartic, P, Q)
    coeffs = []
    for i in range(5):
        poly = r.terms.get((i, 4 - i), zero)
        if not isinstance(poly, SparsePoly):
            poly = SparsePoly.constant(Fraction(poly), 3)
        coeffs.append(poly)
    return Char3Profile(Fraction(lambda1), Fraction(lambda2), tuple(coeffs))


def parity_admissible(ord_b: int, ord_c: int, ord_lambda1: int, ord_lambda2: int) -> bool:
    """Parity rule for unramified 3-adic intersection points on the labc
    family: the valuation of b must match that of lambda1 mod 2, and the
    valuation of c that of lambda2."""
    return (ord_b - ord_lambda1) % 2 == 0 and (ord_c - ord_lambda2) % 2 == 0


def _coordinate_valuation(c, p):
    if isinstance(c, (PadicApprox, UElt)):
        return c.valuation()
    c = Fraction(c)
    if c == 0:
        return None
    return valuation_of_rational(c, p)


@dataclass(frozen=True)
class CuspProximityReport:
    """3-adic closeness of points to the coordinate cusp line.

    depth is min over the non-cusp coordinates (0, 3, 4, 5) of their
    valuation in a primitive representative; distance = p^(-depth).
    depth None means the point lies on the cusp line exactly, with
    distance 0."""

    p: int
    depths: tuple
    distances: tuple


def cusp_proximity(points, p: int = 3, noncusp=(0, 3, 4, 5)) -> CuspProximityReport:
    """Depth None (infinite agreement) comes with distance 0 exactly.

    Coordinates indistinguishable from zero at their working precision
    are never treated as exact zeros: when such a coordinate could
    still change the depth, the report refuses with a PrecisionError
    instead of certifying from incomplete evidence.
    """
    depths = []
    distances = []
    for pt in points:
        vals = [_coordinate_valuation(c, p) for c in pt]
        finite = [v for v in vals if isinstance(v, int)]
        bounds = [
            v.lower_bound for v in vals if isinstance(v, IndeterminateValuation)
        ]
        if not finite:
            if bounds:
                raise PrecisionError(
                    "no coordinate valuation is certified at this precision",
                    needed=max(bounds) + 1,
                )
            raise HmsError("point has no coordinate of certified valuation")
        vmin = min(finite)
        if bounds and min(bounds) < vmin:
            raise PrecisionError(
                "primitive scaling of the point is unresolved",
                needed=vmin + 1,
            )
        depth = None
        for i in noncusp:
            v = vals[i]
            if isinstance(v, int):
                d = v - vmin
                if depth is None or d < depth:
                    depth = d
        floors = [
            vals[i].lower_bound - vmin
            for i in noncusp
            if isinstance(vals[i], IndeterminateValuation)
        ]
        if floors and (depth is None or min(floors) < depth):
            needed = (
                vmin + depth + 1
                if depth is not None
                else max(f + vmin for f in floors) + 1
            )
            raise PrecisionError(
                "cusp depth is unresolved at this precision", needed=needed
            )
        depths.append(depth)
        distances.append(Fraction(0) if depth is None else Fraction(1, p**depth))
    return CuspProximityReport(p=p, depths=tuple(depths), distances=tuple(distances))
