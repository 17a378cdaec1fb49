"""The branch sextic of the projection from the node ``E4 = (0:0:0:1)`` and its tangencies.

Writing ``F = P X3^2 + Qc X3 + R`` with ``P, Qc, R`` in ``X0, X1, X2``, the
projection is branched along ``G = Qc^2 - 4 P R``.  The curves tested against
``G`` are pulled back to binary forms; tangency everywhere along a curve means
the pullback is a square.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import NotANode, ParametrizationFailure
from ..exactmath.binaryform import BinaryForm, distinct_root_count, is_perfect_square
from ..exactmath.matrix import nullspace
from ..exactmath.multipoly import MultiPoly, symbols
from ..exactmath.unipoly import poly_gcd
from .surface import classify_plane_point, classify_surface_point, tangent_cone_line

PLANE = ("X0", "X1", "X2")
CUSPS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass
class BranchSextic:
    G: MultiPoly
    P: MultiPoly       # tritangent conic (image of the node)
    Qc: MultiPoly      # cubic through the cusps and all tangency points
    L: MultiPoly       # tritangent line (the residual line opposite the node)
    R: MultiPoly

    def matches_printed(self, coeffs):
        return self.G == printed_branch_sextic(coeffs)


def printed_branch_sextic(c):
    """The sextic written out directly from the coefficients (constant term ``delta``)."""
    X0, X1, X2 = symbols(*PLANE)
    A = c.a0 * X0 + c.a1 * X1 + c.a2 * X2
    cubic = (X0 * X1 * (c.b0 * X0 + c.b1 * X1) + X0 * X2 * (c.c0 * X0 + c.c2 * X2)
             + X1 * X2 * (c.d1 * X1 + c.d2 * X2) + c.delta * X0 * X1 * X2)
    conic = c.b3 * X0 * X1 + c.c3 * X0 * X2 + c.d3 * X1 * X2
    return cubic * cubic - 4 * A * X0 * X1 * X2 * conic


def branch_sextic(q, node_index=4):
    if node_index != 4:
        raise ValueError("the projection node is fixed at E4 = (0:0:0:1); relabel coefficients for other nodes")
    rep = classify_surface_point(q, (0, 0, 0, 1))
    if rep.classification != "node":
        raise NotANode(f"(0:0:0:1) is {rep.classification}")
    parts = q.F.coeffs_in("X3")
    if max(parts) != 2:
        raise NotANode("F is not quadratic in X3")

    def part(k):
        p = parts.get(k, MultiPoly.zero(q.F.variables))
        return p.restrict(PLANE) if p else MultiPoly.zero(PLANE)

    R, Qc, P = part(0), part(1), part(2)
    G = Qc * Qc - 4 * P * R
    L = q.faces["A"].form.restrict(PLANE)
    return BranchSextic(G, P, Qc, L, R)


# parametrisations ------------------------------------------------------------------

@dataclass
class Parametrization:
    """``X_k = coords[k](s, t)``, binary forms of a common degree."""

    name: str
    coords: tuple
    forced: BinaryForm | None = None   # factor whose square divides every pullback of G (cusps)
    cusp_factors: tuple = ()           # linear forms vanishing at the parameters of the cusps

    def pullback(self, poly):
        names = ("s", "t")
        subs = {v: c.to_multipoly().extend(names) for v, c in zip(PLANE, self.coords)}
        out = poly.substitute(subs).extend(names)
        deg = poly.total_degree() * self.coords[0].degree
        return BinaryForm.from_multipoly(out, "s", "t", deg) if not out.is_zero() else BinaryForm([], deg)


def line_parametrization(coeffs, name="line"):
    """Two points spanning ``sum coeffs[k] X_k = 0``."""
    basis = nullspace([list(coeffs)])
    if len(basis) != 2:
        raise ParametrizationFailure(f"{coeffs} is not a line")
    p, r = basis
    return Parametrization(name, tuple(BinaryForm([p[k], r[k]], 1) for k in range(3)))


def edge_parametrization(k):
    """The side ``X_k = 0`` of the coordinate triangle."""
    coeffs = [0, 0, 0]
    coeffs[k] = 1
    return line_parametrization(coeffs, f"X{k}=0")


def conic_parametrization(P):
    """The conic ``b X0 X1 + c X0 X2 + d X1 X2 = 0`` through the coordinate points.

    ``(X0:X1:X2) = (v w : u w : u v)`` maps the line ``d u + c v + b w = 0`` onto
    it; the coordinate points come from ``u = 0``, ``v = 0``, ``w = 0``.
    """
    b = P.coefficient({"X0": 1, "X1": 1})
    c = P.coefficient({"X0": 1, "X2": 1})
    d = P.coefficient({"X1": 1, "X2": 1})
    others = [e for e, _ in P.terms.items() if e not in ((1, 1, 0), (1, 0, 1), (0, 1, 1))]
    if others or not (b and c and d):
        raise ParametrizationFailure("conic does not have the shape b X0X1 + c X0X2 + d X1X2 with bcd != 0")
    u, v, w = line_parametrization((d, c, b)).coords
    return Parametrization("conic", (v * w, u * w, u * v), u * v * w, (u, v, w))


# tangency tests --------------------------------------------------------------------------

@dataclass
class TangencyReport:
    curve: str
    square: bool
    tangency_root: BinaryForm | None
    tangency_points: int           # distinct roots of the square root
    points_outside_cusps: int
    ok: bool
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _cusp_roots(par):
    """Binary linear forms vanishing at the parameters mapped to the cusps."""
    out = []
    for cusp in CUSPS:
        # parameter (s:t) with coords proportional to the cusp
        for root in _roots_on_curve(par, cusp):
            out.append(root)
    return out


def _roots_on_curve(par, point):
    # the two coordinates that must vanish give a common linear factor
    zero_idx = [k for k in range(3) if not point[k]]
    forms = [par.coords[k] for k in zero_idx]
    g = None
    for f in forms:
        u = f.dehomogenize()
        g = u if g is None else poly_gcd(g, u)
    out = []
    if g is not None and g.degree >= 1:
        out.append(BinaryForm(g.coeffs, g.degree))
    # the parameter (0:1), where s vanishes, is invisible to f(1, t)
    if all(f.coeffs[-1] == 0 for f in forms):
        out.append(BinaryForm([1, 0], 1))
    return out


def tritangency_check(G, curve, expected_points=3):
    """Pull ``G`` back to ``curve`` and decide whether it is a square off the cusps.

    ``curve`` is a ``Parametrization`` (use ``line_parametrization``,
    ``edge_parametrization`` or ``conic_parametrization``).  Forced cusp factors
    are divided out first; the result is a square whose root has
    ``expected_points`` distinct roots away from the cusps.
    """
    f = curve.pullback(G)
    if f.is_zero():
        raise ParametrizationFailure(f"{curve.name} is a component of the sextic")
    notes = []
    if curve.forced is not None:
        sq = curve.forced * curve.forced
        if not sq.divides(f):
            return TangencyReport(curve.name, False, None, 0, 0, False, ["cusp parameters are not double roots"])
        f = f.exact_div(sq)
        notes.append("divided out the squared cusp parameters")
    root = is_perfect_square(f)
    if root is None:
        return TangencyReport(curve.name, False, None, 0, 0, False, notes)
    g = root.root
    n = distinct_root_count(g)
    cusp_roots = curve.cusp_factors if curve.cusp_factors else _cusp_roots(curve)
    outside = n
    for cr in cusp_roots:
        if cr.divides(g):
            outside -= 1
            while cr.divides(g):
                g = g.exact_div(cr)
    ok = outside == expected_points and distinct_root_count(g) == g.degree
    return TangencyReport(curve.name, True, root.root, n, outside, ok, notes)


@dataclass
class CubicCheck:
    name: str
    holds: bool
    detail: str = ""


def tangency_cubic_check(G, Qc, L, P):
    """The cubic ``Qc`` passes through every tangency point and shares the cusp tangents."""
    checks = []
    curves = [line_parametrization(tuple(L.coefficient({v: 1}) for v in PLANE), "L"),
              conic_parametrization(P)] + [edge_parametrization(k) for k in range(3)]
    for par in curves:
        rep = tritangency_check(G, par, expected_points=3 if par.name in ("L", "conic") else 1)
        if not rep.square:
            checks.append(CubicCheck(f"tangency points on {par.name}", False, "pullback is not a square"))
            continue
        qf = par.pullback(Qc)
        checks.append(CubicCheck(f"tangency points on {par.name}", rep.tangency_root.divides(qf)))
    for cusp in CUSPS:
        at = dict(zip(PLANE, cusp))
        on = Qc(at) == 0
        grad = tuple(Qc.diff(v)(at) for v in PLANE)
        cone = tangent_cone_line(G, cusp)
        same = on and any(grad) and _proportional(grad, cone)
        checks.append(CubicCheck(f"cusp {cusp}", same, f"grad Qc = {grad}, tangent cone = {cone}"))
    return checks


def _proportional(a, b):
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(len(a)))


def cusp_reports(G):
    return [classify_plane_point(G, c) for c in CUSPS]
