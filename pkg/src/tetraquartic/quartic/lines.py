"""Lines on the quartic, found chart by chart on the Grassmannian of lines in P^3.

In the chart ``U_ij`` a line is the row space of a 2x4 matrix whose columns
``i, j`` form the identity; the other four entries are unknowns.  Substituting
``u * row1 + v * row2`` into ``F`` and collecting the coefficients of ``u, v``
gives five equations.  A line lies in several charts, so in ``U_ij`` the
Pluecker coordinates of all earlier charts are required to vanish; each line
is then counted exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..errors import InfiniteFamily, PositiveDimensionalLocus
from ..exactmath.matrix import nullspace
from ..exactmath.multipoly import MultiPoly
from ..exactmath.groebner import solve_zero_dim
from .surface import VARS

CHARTS = tuple(combinations(range(4), 2))   # (0,1), (0,2), (0,3), (1,2), (1,3), (2,3)
UNKNOWNS = ("p", "q", "r", "s")


def plucker(row1, row2):
    """Pluecker coordinates ``p_ab`` for ``a < b`` in chart order."""
    return tuple(row1[a] * row2[b] - row1[b] * row2[a] for a, b in CHARTS)


def normalize(pl):
    lead = next(x for x in pl if x)
    return tuple(Fraction(x) / lead for x in pl)


@dataclass(frozen=True)
class Line:
    """A line of P^3 spanned by two rational points."""

    row1: tuple
    row2: tuple
    name: str = ""

    @property
    def plucker(self):
        return normalize(plucker(self.row1, self.row2))

    def same_as(self, other):
        return self.plucker == other.plucker

    def restrict(self, F):
        u, v = MultiPoly.var("u", ("u", "v")), MultiPoly.var("v", ("u", "v"))
        return F.substitute({VARS[k]: self.row1[k] * u + self.row2[k] * v for k in range(4)})

    def lies_on(self, F):
        return self.restrict(F).is_zero()

    def describe(self):
        return f"{self.name or 'line'}: span({_fmt(self.row1)}, {_fmt(self.row2)})"


def _fmt(p):
    return "(" + ":".join(str(x) for x in p) + ")"


def line_from_equations(forms):
    """The line cut out by two independent linear forms (coefficient 4-tuples)."""
    basis = nullspace([list(f) for f in forms])
    if len(basis) != 2:
        raise ValueError("two independent linear forms are needed")
    return Line(tuple(basis[0]), tuple(basis[1]))


def named_lines(q):
    """The six edges and four residual lines of the quartic ``q``."""
    out = []
    for i, j in combinations(range(1, 5), 2):
        e = [[1 if m == k - 1 else 0 for m in range(4)] for k in (i, j)]
        out.append(Line(tuple(e[0]), tuple(e[1]), f"L{i}{j}"))
    for face in q.faces.values():
        face_eq = tuple(1 if m == face.coordinate else 0 for m in range(4))
        form = tuple(face.form.coefficient({v: 1}) for v in VARS)
        ln = line_from_equations([face_eq, form])
        out.append(Line(ln.row1, ln.row2, face.residual))
    return out


def _chart_rows(i, j):
    """Rows of the chart matrix with ``p, q`` in row 1 and ``r, s`` in row 2."""
    others = [k for k in range(4) if k not in (i, j)]
    p, q, r, s = (MultiPoly.var(n, UNKNOWNS) for n in UNKNOWNS)
    one, zero = MultiPoly.constant(1, UNKNOWNS), MultiPoly.zero(UNKNOWNS)
    row1, row2 = [zero] * 4, [zero] * 4
    row1[i], row2[j] = one, one
    row1[others[0]], row1[others[1]] = p, q
    row2[others[0]], row2[others[1]] = r, s
    return row1, row2


def chart_system(F, chart):
    """Equations in ``p, q, r, s`` for lines of the chart not already seen in earlier charts."""
    i, j = chart
    row1, row2 = _chart_rows(i, j)
    names = ("u", "v") + UNKNOWNS
    u, v = MultiPoly.var("u", names), MultiPoly.var("v", names)
    restricted = F.substitute({VARS[k]: row1[k] * u + row2[k] * v for k in range(4)})
    eqs = []
    for _, c in sorted(restricted.coeffs_in("u").items()):
        for _, cc in sorted(c.coeffs_in("v").items()):
            eqs.append(cc.restrict(UNKNOWNS) if not set(cc.used_variables()) - set(UNKNOWNS) else cc)
    for a, b in CHARTS[:CHARTS.index(chart)]:
        eqs.append(row1[a] * row2[b] - row1[b] * row2[a])
    return [e for e in eqs if not e.is_zero()], (row1, row2)


@dataclass
class ChartResult:
    chart: tuple
    count: int            # distinct complex solutions
    lines: list           # rational ones


def lines_in_chart(F, chart):
    eqs, (row1, row2) = chart_system(F, chart)
    if any(e.is_constant() for e in eqs):
        return ChartResult(chart, 0, [])
    try:
        sol = solve_zero_dim(eqs, UNKNOWNS)
    except PositiveDimensionalLocus:
        raise InfiniteFamily(f"infinitely many lines in chart {chart}") from None
    found = []
    for s in sol.rational:
        r1 = tuple(x(s) if isinstance(x, MultiPoly) else x for x in row1)
        r2 = tuple(x(s) if isinstance(x, MultiPoly) else x for x in row2)
        found.append(Line(tuple(Fraction(x) for x in r1), tuple(Fraction(x) for x in r2)))
    return ChartResult(chart, sol.count, found)


@dataclass
class LineEnumeration:
    count: int
    lines: list
    per_chart: list
    all_rational: bool

    def names(self):
        return sorted(ln.name for ln in self.lines)


def enumerate_lines(q, jobs=1):
    """All lines on the surface, named after the edges and residual lines when they match."""
    charts = list(CHARTS)
    if jobs and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(lines_in_chart, [q.F] * len(charts), charts))
    else:
        results = [lines_in_chart(q.F, c) for c in charts]
    known = named_lines(q)
    lines = []
    for res in results:
        for ln in res.lines:
            name = next((k.name for k in known if k.same_as(ln)), "")
            lines.append(Line(ln.row1, ln.row2, name))
    count = sum(r.count for r in results)
    return LineEnumeration(count, lines, [(r.chart, r.count) for r in results], len(lines) == count)
