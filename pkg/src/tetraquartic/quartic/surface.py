"""The quartic surface itself: construction, singular points and edge cross-ratios."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DegenerateCoefficient, PointNotOnCurve, PointNotOnSurface, PositiveDimensionalLocus
from ..exactmath.matrix import rank
from ..exactmath.multipoly import MultiPoly, symbols
from ..exactmath.groebner import solve_zero_dim
from .coefficients import EDGE_KEYS, QuarticCoefficients

VARS = ("X0", "X1", "X2", "X3")


@dataclass(frozen=True)
class Face:
    """A face ``X_k = 0`` of the coordinate tetrahedron and the residual line in it."""

    letter: str          # A, B, C or D
    coordinate: int      # the face is X_coordinate = 0
    residual: str        # R_j lying in the face
    opposite_node: str   # E_j, the vertex off the face
    form: MultiPoly      # linear form cutting the residual line inside the face


@dataclass
class TetraQuartic:
    coeffs: QuarticCoefficients
    F: MultiPoly
    faces: dict

    @property
    def variables(self):
        return VARS

    def gradient(self):
        return [self.F.diff(v) for v in VARS]

    def contains(self, point):
        return self.F(dict(zip(VARS, point))) == 0


def build_quartic(c: QuarticCoefficients) -> TetraQuartic:
    X0, X1, X2, X3 = symbols(*VARS)
    A = c.a0 * X0 + c.a1 * X1 + c.a2 * X2
    B = c.b0 * X0 + c.b1 * X1 + c.b3 * X3
    C = c.c0 * X0 + c.c2 * X2 + c.c3 * X3
    D = c.d1 * X1 + c.d2 * X2 + c.d3 * X3
    F = A * X0 * X1 * X2 + B * X0 * X1 * X3 + C * X0 * X2 * X3 + D * X1 * X2 * X3 + c.delta * X0 * X1 * X2 * X3
    faces = {
        "A": Face("A", 3, "R4", "E4", A),
        "B": Face("B", 2, "R3", "E3", B),
        "C": Face("C", 1, "R2", "E2", C),
        "D": Face("D", 0, "R1", "E1", D),
    }
    return TetraQuartic(c, F, faces)


def face_of_residual(q, j):
    for face in q.faces.values():
        if face.residual == f"R{j}":
            return face
    raise KeyError(j)


def edge_vanishes(q, i, j):
    """F restricted to the edge through the vertices ``E_i``, ``E_j`` is identically zero."""
    zero = {VARS[k]: 0 for k in range(4) if k not in (i - 1, j - 1)}
    return q.F.substitute(zero).is_zero()


# local analysis ---------------------------------------------------------------

@dataclass
class SingularityReport:
    point: tuple
    multiplicity: int
    tangent_cone_rank: int
    classification: str        # node, cusp, worse, smooth
    quadratic_part: MultiPoly | None = None


def _local_expansion(poly, variables, point):
    """Dehomogenize at a nonzero coordinate and move ``point`` to the origin."""
    point = tuple(Fraction(x) for x in point)
    k = next(i for i, x in enumerate(point) if x)
    local = [v for i, v in enumerate(variables) if i != k]
    subs = {variables[k]: 1}
    for i, v in enumerate(variables):
        if i != k:
            subs[v] = MultiPoly.var(v, local) + point[i] / point[k]
    return poly.substitute(subs).extend(tuple(local)).restrict(tuple(local)), local


def _hessian_rank(quad, local):
    m = [[quad.diff(a).diff(b).constant_value() if quad.diff(a).diff(b) else 0 for b in local] for a in local]
    return rank(m)


def local_data(poly, variables, point):
    loc, local = _local_expansion(poly, variables, point)
    if loc.is_zero():
        raise PositiveDimensionalLocus("polynomial vanishes identically")
    mult = loc.min_degree()
    quad = loc.homogeneous_part(2)
    r = _hessian_rank(quad, local) if mult == 2 else (0 if mult > 2 else len(local))
    return loc, local, mult, quad, r


def classify_surface_point(q, p):
    p = tuple(Fraction(x) for x in p)
    if not any(p):
        raise ValueError("(0:0:0:0) is not a projective point")
    if not q.contains(p):
        raise PointNotOnSurface(f"F{p} != 0")
    _, _, mult, quad, r = local_data(q.F, VARS, p)
    if mult == 1:
        kind = "smooth"
    elif mult == 2 and r == 3:
        kind = "node"
    else:
        kind = "worse"
    return SingularityReport(p, mult, r, kind, quad if mult == 2 else None)


def classify_plane_point(G, p, variables=("X0", "X1", "X2")):
    """Node, cusp or worse for a point of a plane curve; smooth when the gradient is nonzero."""
    p = tuple(Fraction(x) for x in p)
    if G(dict(zip(variables, p))) != 0:
        raise PointNotOnCurve(f"G{p} != 0")
    loc, local, mult, quad, r = local_data(G, variables, p)
    if mult == 1:
        return SingularityReport(p, 1, 2, "smooth")
    if mult == 2 and r == 2:
        return SingularityReport(p, 2, 2, "node", quad)
    if mult == 2 and r == 1:
        tangent = _tangent_line(quad, local)
        cubic = loc.homogeneous_part(3)
        kind = "worse" if tangent.divides(cubic) else "cusp"
        return SingularityReport(p, 2, 1, kind, quad)
    return SingularityReport(p, mult, r, "worse", quad if mult == 2 else None)


def _tangent_line(quad, local):
    """The line ``l`` with ``quad = c * l^2`` for a rank-one binary quadratic."""
    u, v = local
    a = quad.coefficient({u: 2})
    b = quad.coefficient({u: 1, v: 1})
    c = quad.coefficient({v: 2})
    U, V = MultiPoly.var(u, local), MultiPoly.var(v, local)
    # a u^2 + b uv + c v^2 = a (u + b/(2a) v)^2 when a != 0
    if a:
        return U + (b / (2 * a)) * V
    return V


def tangent_cone_line(G, p, variables=("X0", "X1", "X2")):
    """Projective tangent line of a cusp, as coefficients of ``X0, X1, X2``."""
    loc, local, mult, quad, r = local_data(G, variables, p)
    if mult != 2 or r != 1:
        raise ValueError("not a rank-one double point")
    ell = _tangent_line(quad, local)
    return _homogeneous_line(ell, local, variables, p)


def _homogeneous_line(ell, local, variables, p):
    # ell(y) with y_i = X_i/X_k - p_i/p_k ; homogenise: sum l_i (X_i - p_i/p_k X_k)
    p = tuple(Fraction(x) for x in p)
    k = next(i for i, x in enumerate(p) if x)
    coeffs = [Fraction(0)] * len(variables)
    for v in local:
        i = variables.index(v)
        li = ell.coefficient({v: 1})
        coeffs[i] += li
        coeffs[k] -= li * p[i] / p[k]
    return tuple(coeffs)


# singular locus -----------------------------------------------------------------

@dataclass
class SingularLocus:
    count: int
    points: list
    per_chart: list = field(default_factory=list)   # (chart index, distinct solutions)
    all_rational: bool = True


def singular_locus_count(q):
    """Distinct singular points of the surface, chart by chart.

    Chart ``k`` sets ``X_k = 1`` and ``X_j = 0`` for ``j < k``, so every point is
    seen exactly once.  Raises PositiveDimensionalLocus if the singular set is a curve.
    """
    eqs = [q.F] + q.gradient()
    total, points, per_chart, rational = 0, [], [], True
    for k in range(4):
        sub = {VARS[j]: 0 for j in range(k)}
        sub[VARS[k]] = 1
        free = tuple(v for v in VARS if v not in sub)
        system = [e.substitute(sub) for e in eqs]
        system = [s for s in system if not s.is_zero()]
        if not free:
            n = 0 if any(s.constant_value() for s in system) else 1
            sols = [{}] if n else []
            per_chart.append((k, n))
            total += n
            points.extend(_point(k, s, free) for s in sols)
            continue
        sol = solve_zero_dim(system, free)
        per_chart.append((k, sol.count))
        total += sol.count
        rational = rational and sol.all_rational
        points.extend(_point(k, s, free) for s in sol.rational)
    return SingularLocus(total, points, per_chart, rational)


def _point(k, sol, free):
    p = [Fraction(0)] * 4
    p[k] = Fraction(1)
    for v in free:
        p[VARS.index(v)] = sol[v]
    return tuple(p)


VERTICES = {f"E{k + 1}": tuple(1 if i == k else 0 for i in range(4)) for k in range(4)}


# cross-ratios -------------------------------------------------------------------------

def cross_ratios(q):
    """Closed-form cross-ratio of the four special points on every edge."""
    out = {}
    for key, (num, den) in q.coeffs.cross_ratio_fractions().items():
        if not den:
            raise DegenerateCoefficient(f"cross-ratio on edge {key} has a zero denominator")
        out[key] = num / den
    return out


def cross_ratio_relation(lam):
    """``lam12 lam14 lam23 lam34 - lam13 lam24`` (zero for every tetrahedral quartic)."""
    return lam["12"] * lam["14"] * lam["23"] * lam["34"] - lam["13"] * lam["24"]


def symbolic_cross_ratio_relation():
    """The relation cleared of denominators, as a polynomial in the twelve coefficients."""
    names = ("a0", "a1", "a2", "b0", "b1", "b3", "c0", "c2", "c3", "d1", "d2", "d3")
    g = dict(zip(names, symbols(*names)))
    frac = {
        "12": (g["a1"] * g["b0"], g["a0"] * g["b1"]),
        "13": (g["a2"] * g["c0"], g["a0"] * g["c2"]),
        "14": (g["b3"] * g["c0"], g["b0"] * g["c3"]),
        "23": (g["a2"] * g["d1"], g["a1"] * g["d2"]),
        "24": (g["b3"] * g["d1"], g["b1"] * g["d3"]),
        "34": (g["c3"] * g["d2"], g["c2"] * g["d3"]),
    }
    lhs_num = frac["12"][0] * frac["14"][0] * frac["23"][0] * frac["34"][0]
    lhs_den = frac["12"][1] * frac["14"][1] * frac["23"][1] * frac["34"][1]
    rhs_num = frac["13"][0] * frac["24"][0]
    rhs_den = frac["13"][1] * frac["24"][1]
    return lhs_num * rhs_den - rhs_num * lhs_den


def _det2(p, r):
    return p[0] * r[1] - p[1] * r[0]


def cross_ratio_of_points(p1, p2, p3, p4):
    """``(p1-p3)(p2-p4) / ((p1-p4)(p2-p3))`` for points of the projective line."""
    den = _det2(p1, p4) * _det2(p2, p3)
    if not den:
        raise DegenerateCoefficient("coincident points in a cross-ratio")
    return _det2(p1, p3) * _det2(p2, p4) / den


def edge_points(q, i, j):
    """The four special points on the edge ``E_i E_j`` in the coordinates ``(X_{i-1} : X_{j-1})``.

    The residual points come from the surface itself: restricting ``F`` to the
    face that contains the edge leaves the three edges of that face times the
    residual line, and the residual line meets the edge where that linear
    factor vanishes.
    """
    xi, xj = VARS[i - 1], VARS[j - 1]
    pts = {f"E{i}": (Fraction(1), Fraction(0)), f"E{j}": (Fraction(0), Fraction(1))}
    for k in (1, 2, 3, 4):
        if k in (i, j):
            continue
        # the face X_{k-1} = 0 contains the edge; its residual line is R_k
        others = [VARS[m] for m in range(4) if m != k - 1]
        restricted = q.F.substitute({VARS[k - 1]: 0})
        mono = MultiPoly.constant(1, restricted.variables)
        for v in others:
            mono = mono * MultiPoly.var(v, restricted.variables)
        linear = restricted.exact_div(mono)
        # on the edge only X_{i-1}, X_{j-1} survive
        rest = {v: 0 for v in others if v not in (xi, xj)}
        ell = linear.substitute(rest) if rest else linear
        ci, cj = ell.coefficient({xi: 1}), ell.coefficient({xj: 1})
        if not ci and not cj:
            raise DegenerateCoefficient(f"residual line R{k} contains the edge {i}{j}")
        pts[f"R{k}"] = (cj, -ci)
    return pts


def cross_ratio_oracle(q, edge):
    """Cross-ratio ``(E_i, E_j; R_k, R_l)`` with ``k < l`` computed from the four points."""
    i, j = (int(x) for x in edge) if isinstance(edge, str) else edge
    pts = edge_points(q, i, j)
    k, l = sorted(int(n[1]) for n in pts if n.startswith("R"))
    return cross_ratio_of_points(pts[f"E{i}"], pts[f"E{j}"], pts[f"R{k}"], pts[f"R{l}"])


def all_cross_ratio_oracles(q):
    return {key: cross_ratio_oracle(q, key) for key in EDGE_KEYS}
