"""Elliptic fibrations from pencils of planes through a line on the quartic.

A plane through a line ``l`` on the surface cuts the quartic in ``l`` plus a
plane cubic ``C_t``.  Singular members are located with the discriminant of
the ternary cubic, computed as the 6x6 determinant whose rows are the
coefficients of the three first partials of the cubic and of its Hessian.
Coefficients of ``C_t`` have degree at most 2 in ``t`` and the discriminant
has degree 12 in them, so the discriminant is a binary form of degree 24 on
the parameter line; the order at ``t = oo`` is ``24 - deg``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PositiveDimensionalLocus, UnexpectedFactor
from ..exactmath.matrix import bareiss_det
from ..exactmath.multipoly import MultiPoly
from ..exactmath.groebner import solve_zero_dim
from ..exactmath.unipoly import UniPoly, rational_roots, squarefree_part
from .surface import VARS, classify_plane_point, face_of_residual

PARAM = "t"
QUADRATIC_MONOMIALS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))
PENCILS = ("L12", "L13", "L14", "L23", "L24", "L34", "R1", "R2", "R3", "R4")
TOTAL_DEGREE = 24


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _quadric_row(poly, xs, param):
    """Coefficients of the six quadratic monomials, as polynomials in ``param``."""
    idx = [poly.variables.index(v) for v in xs]
    pidx = poly.variables.index(param) if param in poly.variables else None
    acc = {m: {} for m in QUADRATIC_MONOMIALS}
    for e, c in poly.terms.items():
        key = tuple(e[i] for i in idx)
        if key not in acc:
            raise ValueError(f"{poly} is not a quadratic form in {xs}")
        k = e[pidx] if pidx is not None else 0
        acc[key][k] = acc[key].get(k, 0) + c
    row = []
    for m in QUADRATIC_MONOMIALS:
        d = acc[m]
        deg = max(d) if d else -1
        row.append(UniPoly([d.get(k, 0) for k in range(deg + 1)], param))
    return row


def ternary_cubic_discriminant(cubic, xs, param=PARAM):
    """Discriminant (up to a nonzero constant) of a ternary cubic whose coefficients may involve ``param``.

    Returns a ``UniPoly`` in ``param``; a constant polynomial when ``param`` is absent.
    """
    universe = tuple(xs) + ((param,) if param not in xs else ())
    f = cubic.extend(tuple(dict.fromkeys(cubic.variables + universe)))
    grads = [f.diff(v) for v in xs]
    hess = _det3([[g.diff(v) for v in xs] for g in grads])
    rows = [_quadric_row(g, xs, param) for g in grads] + [_quadric_row(hess.diff(v), xs, param) for v in xs]
    return bareiss_det(rows, exact_div=lambda a, b: a.exact_div(b), zero=UniPoly([], param))


# pencils ------------------------------------------------------------------------------

@dataclass
class Pencil:
    name: str
    cubic: MultiPoly        # in the three plane coordinates and t
    plane_vars: tuple
    description: str


def pencil_cubic(q, pencil):
    """Residual cubic ``C_t`` of the plane pencil through the named line."""
    t = MultiPoly.var(PARAM, VARS + (PARAM,))
    F = q.F.extend(VARS + (PARAM,))
    X = {v: MultiPoly.var(v, VARS + (PARAM,)) for v in VARS}
    if pencil.startswith("L"):
        i, j = int(pencil[1]), int(pencil[2])
        k, l = (m for m in range(4) if m not in (i - 1, j - 1))
        sub = {VARS[l]: t * X[VARS[k]]}
        base = X[VARS[k]]
        desc = f"planes {VARS[l]} = t*{VARS[k]}"
        eliminated = VARS[l]
    elif pencil.startswith("R"):
        face = face_of_residual(q, int(pencil[1]))
        m = face.coordinate
        form = face.form.extend(VARS + (PARAM,))
        e = max(k for k in range(4) if form.coefficient({VARS[k]: 1}))
        ce = form.coefficient({VARS[e]: 1})
        rest = form - ce * X[VARS[e]]
        sub = {VARS[e]: (t * X[VARS[m]] - rest) * (1 / ce)}
        base = X[VARS[m]]
        desc = f"planes {face.letter} = t*{VARS[m]}"
        eliminated = VARS[e]
    else:
        raise ValueError(f"unknown pencil {pencil!r}")
    restricted = F.substitute(sub)
    plane_vars = tuple(v for v in VARS if v != eliminated)
    restricted = restricted.restrict(plane_vars + (PARAM,))
    base = base.restrict(restricted.variables)
    try:
        cubic = restricted.exact_div(base)
    except ValueError:
        raise UnexpectedFactor(f"the base line of {pencil} is not on the surface") from None
    return Pencil(pencil, cubic, plane_vars, desc)


@dataclass
class FiberReport:
    pencil: str
    reducible_fibers: list           # (type "I_n", parameter) with parameter a Fraction or "oo"
    nodal_fiber_count: int
    euler_sum: int
    discriminant_degree: int
    irrational_part_squarefree: bool
    rational_nodal_checked: list = field(default_factory=list)   # (parameter, is a single node)
    description: str = ""

    def reducible_types(self):
        return sorted(kind for kind, _ in self.reducible_fibers)


def _multiplicity(p, r):
    lin = UniPoly([-r, 1], p.var)
    m = 0
    while p.degree >= 1:
        quo, rem = divmod(p, lin)
        if rem:
            break
        p, m = quo, m + 1
    return m, p


def fibration_fibers(q, pencil, check_rational_nodes=True):
    pen = pencil_cubic(q, pencil)
    tdeg = max((e[-1] for e in pen.cubic.terms), default=0)
    if tdeg > 2:
        raise UnexpectedFactor(f"cubic coefficients have degree {tdeg} in t")
    delta = ternary_cubic_discriminant(pen.cubic, pen.plane_vars)
    if delta.is_zero():
        raise UnexpectedFactor(f"discriminant of the {pencil} pencil vanishes identically")
    at_infinity = TOTAL_DEGREE - delta.degree
    if at_infinity < 0:
        raise UnexpectedFactor(f"discriminant degree {delta.degree} exceeds {TOTAL_DEGREE}")
    roots = []
    rest = delta
    for r in rational_roots(delta):
        m, rest = _multiplicity(rest, r)
        roots.append((r, m))
    reducible, simple = [], []
    for r, m in roots:
        (reducible if m >= 2 else simple).append((r, m))
    reducible_fibers = [(f"I{m}", r) for r, m in reducible]
    if at_infinity >= 2:
        reducible_fibers.append((f"I{at_infinity}", "oo"))
    irrational = squarefree_part(rest).degree if rest.degree >= 1 else 0
    squarefree = irrational == max(rest.degree, 0)
    nodal = irrational + len(simple) + (1 if at_infinity == 1 else 0)
    euler = sum(int(kind[1:]) for kind, _ in reducible_fibers) + nodal
    checked = []
    if check_rational_nodes:
        for r, _ in simple:
            checked.append((r, _is_single_node(pen, r)))
    return FiberReport(pencil, reducible_fibers, nodal, euler, delta.degree, squarefree, checked, pen.description)


def _is_single_node(pen, r):
    cubic = pen.cubic.substitute({PARAM: r}).extend(pen.plane_vars).restrict(pen.plane_vars)
    eqs = [cubic.diff(v) for v in pen.plane_vars]
    pts = []
    for k in range(3):
        sub = {pen.plane_vars[j]: 0 for j in range(k)}
        sub[pen.plane_vars[k]] = 1
        free = tuple(v for v in pen.plane_vars if v not in sub)
        sys_ = [e.substitute(sub) for e in eqs]
        sys_ = [s for s in sys_ if not s.is_zero()]
        if any(s.is_constant() for s in sys_):
            continue
        if not free:
            pts.append(tuple(1 if j == k else 0 for j in range(3)))
            continue
        try:
            sol = solve_zero_dim(sys_, free)
        except PositiveDimensionalLocus:
            return False
        if sol.count != len(sol.rational):
            return False
        for s in sol.rational:
            p = [Fraction(0)] * 3
            p[k] = Fraction(1)
            for v in free:
                p[pen.plane_vars.index(v)] = s[v]
            pts.append(tuple(p))
    if len(pts) != 1:
        return False
    return classify_plane_point(cubic, pts[0], pen.plane_vars).classification == "node"


def all_fibrations(q, jobs=1):
    if jobs and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fibration_fibers, [q] * len(PENCILS), PENCILS))
    return [fibration_fibers(q, p) for p in PENCILS]
