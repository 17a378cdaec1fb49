"""Buchberger's algorithm over the rationals and zero-dimensional solving.

Polynomials are handled internally as ``{exponent: Fraction}`` dicts over a
fixed variable tuple, ordered by graded reverse lexicographic order.  Only
what the geometry needs is provided: reduced bases, normal forms, minimal
polynomials of coordinates, the radical of a zero-dimensional ideal, the
number of distinct complex solutions, and the rational ones.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PositiveDimensionalLocus
from .matrix import nullspace
from .multipoly import MultiPoly
from .unipoly import UniPoly, rational_roots, squarefree_part


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lead(p):
    return max(p, key=grevlex_key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _monic(p):
    lm = _lead(p)
    inv = 1 / p[lm]
    return {e: c * inv for e, c in p.items()}


def _axpy(target, coeff, shift, p):
    """``target -= coeff * x**shift * p`` in place."""
    for e, c in p.items():
        te = tuple(x + y for x, y in zip(e, shift))
        v = target.get(te, 0) - coeff * c
        if v:
            target[te] = v
        else:
            target.pop(te, None)


def normal_form(p, basis, leads=None):
    """Full reduction of ``p`` modulo ``basis`` (a list of monic dicts)."""
    if leads is None:
        leads = [_lead(g) for g in basis]
    p = dict(p)
    rem = {}
    while p:
        m = _lead(p)
        c = p[m]
        for g, lm in zip(basis, leads):
            if _divides(lm, m):
                _axpy(p, c, _sub_exp(m, lm), g)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f, g, lf, lg):
    l = _lcm(lf, lg)
    out = {}
    _axpy(out, Fraction(-1), _sub_exp(l, lf), f)
    _axpy(out, Fraction(1), _sub_exp(l, lg), g)
    return out


def _update(pairs, leads, new):
    """Gebauer-Moeller pair update after appending the basis element ``new``."""
    h = leads[new]
    cand = [(i, _lcm(leads[i], h)) for i in range(new)]
    accepted = []
    while cand:
        i, l = cand.pop(0)
        coprime = all(a == 0 or b == 0 for a, b in zip(leads[i], h))
        if coprime or not any(_divides(l2, l) for _, l2 in cand + accepted):
            accepted.append((i, l))
    fresh = [
        (i, new, l) for i, l in accepted
        if not all(a == 0 or b == 0 for a, b in zip(leads[i], h))
    ]
    old = [
        (i, j, l) for (i, j, l) in pairs
        if not (_divides(h, l) and _lcm(leads[i], h) != l and _lcm(leads[j], h) != l)
    ]
    return old + fresh


def groebner_basis(polys, nvars):
    """Reduced Groebner basis (grevlex) of dict polynomials on ``nvars`` variables."""
    basis, leads = [], []
    pairs = []
    for p in polys:
        p = normal_form(p, basis, leads) if basis else dict(p)
        if not p:
            continue
        p = _monic(p)
        basis.append(p)
        leads.append(_lead(p))
        pairs = _update(pairs, leads, len(basis) - 1)
    while pairs:
        pairs.sort(key=lambda t: grevlex_key(t[2]))
        i, j, _ = pairs.pop(0)
        h = normal_form(_spoly(basis[i], basis[j], leads[i], leads[j]), basis, leads)
        if not h:
            continue
        h = _monic(h)
        basis.append(h)
        leads.append(_lead(h))
        if not any(leads[-1]):
            return [{(0,) * nvars: Fraction(1)}]
        pairs = _update(pairs, leads, len(basis) - 1)
    return _reduce(basis, leads)


def _reduce(basis, leads):
    keep = []
    for k, lm in enumerate(leads):
        if any(_divides(leads[j], lm) and (leads[j] != lm or j < k) for j in range(len(leads)) if j != k):
            continue
        keep.append(k)
    mins = [basis[k] for k in keep]
    out = []
    for k, g in enumerate(mins):
        others = mins[:k] + mins[k + 1:]
        lm = _lead(g)
        tail = {e: c for e, c in g.items() if e != lm}
        red = normal_form(tail, others) if others else tail
        red[lm] = Fraction(1)
        out.append(red)
    out.sort(key=lambda p: grevlex_key(_lead(p)))
    return out


def standard_monomials(basis, nvars):
    """Monomials outside the leading-term ideal; None if there are infinitely many."""
    leads = [_lead(g) for g in basis]
    if not leads:
        return [()] if nvars == 0 else None
    for v in range(nvars):
        if not any(lm[v] > 0 and all(lm[w] == 0 for w in range(nvars) if w != v) for lm in leads):
            return None
    found = []
    stack = [(0,) * nvars]
    seen = set(stack)
    while stack:
        m = stack.pop()
        if any(_divides(lm, m) for lm in leads):
            continue
        found.append(m)
        for v in range(nvars):
            n = m[:v] + (m[v] + 1,) + m[v + 1:]
            if n not in seen:
                seen.add(n)
                stack.append(n)
    found.sort(key=grevlex_key)
    return found


def minimal_polynomial(basis, nvars, var_index, variable="x"):
    """Monic generator of ``I intersected with Q[x_var]`` for zero-dimensional ``I``."""
    std = standard_monomials(basis, nvars)
    if std is None:
        raise PositiveDimensionalLocus("ideal is not zero-dimensional")
    leads = [_lead(g) for g in basis]
    pos = {m: k for k, m in enumerate(std)}
    unit = [0] * nvars
    unit[var_index] = 1
    unit = tuple(unit)
    vecs = []
    cur = normal_form({(0,) * nvars: Fraction(1)}, basis, leads)
    for k in range(len(std) + 1):
        vec = [Fraction(0)] * len(std)
        for e, c in cur.items():
            vec[pos[e]] = c
        vecs.append(vec)
        # dependency among NF(1), NF(x), ..., NF(x^k)?
        cols = [list(r) for r in zip(*vecs)]
        ns = nullspace(cols)
        if ns:
            rel = ns[0]
            poly = UniPoly(rel, variable)
            return poly.monic()
        nxt = {}
        for e, c in cur.items():
            nxt[tuple(a + b for a, b in zip(e, unit))] = c
        cur = normal_form(nxt, basis, leads)
    raise AssertionError("no linear dependency found among powers")


def _to_dicts(polys, variables):
    out = []
    for p in polys:
        if isinstance(p, MultiPoly):
            out.append(dict(p.restrict(variables).terms))
        else:
            out.append(dict(p))
    return out


def _univariate_dict(poly, var_index, nvars):
    out = {}
    for k, c in enumerate(poly.coeffs):
        if c:
            e = [0] * nvars
            e[var_index] = k
            out[tuple(e)] = c
    return out


@dataclass
class ZeroDimSolution:
    """Outcome of solving a zero-dimensional system over the rationals."""

    variables: tuple
    count: int                      # distinct complex solutions
    multiplicity_count: int         # dimension of the quotient ring
    rational: list = field(default_factory=list)   # list of {name: Fraction}
    radical_basis: list = field(default_factory=list)

    @property
    def all_rational(self):
        return len(self.rational) == self.count


def solve_zero_dim(polys, variables, find_rational=True):
    """Count distinct solutions of ``polys = 0`` and list the rational ones.

    Raises PositiveDimensionalLocus when the solution set is infinite.
    """
    variables = tuple(variables)
    n = len(variables)
    gens = _to_dicts(polys, variables)
    gb = groebner_basis(gens, n)
    if _is_unit(gb):
        return ZeroDimSolution(variables, 0, 0, [], [])
    std = standard_monomials(gb, n)
    if std is None:
        raise PositiveDimensionalLocus(f"infinitely many solutions in {variables}")
    mult = len(std)
    # radical: adjoin squarefree minimal polynomials of every coordinate
    extra = []
    for i, v in enumerate(variables):
        mp = minimal_polynomial(gb, n, i, v)
        extra.append(_univariate_dict(squarefree_part(mp), i, n))
    rad = groebner_basis(gb + extra, n)
    count = len(standard_monomials(rad, n))
    sols = _rational_points(rad, variables, {}) if find_rational else []
    sols.sort(key=lambda d: tuple(d[v] for v in variables))
    return ZeroDimSolution(variables, count, mult, sols, [MultiPoly(variables, g) for g in rad])


def _is_unit(gb):
    return len(gb) == 1 and not any(_lead(gb[0]))


def _rational_points(gb, variables, fixed):
    n = len(variables)
    if _is_unit(gb):
        return []
    free = [i for i, v in enumerate(variables) if v not in fixed]
    if not free:
        return [dict(fixed)]
    i = free[0]
    mp = minimal_polynomial(gb, n, i, variables[i])
    out = []
    for r in rational_roots(mp):
        e = [0] * n
        e[i] = 1
        lin = {tuple(e): Fraction(1)}
        if r:
            lin[(0,) * n] = -r
        sub = groebner_basis(gb + [lin], n)
        out.extend(_rational_points(sub, variables, {**fixed, variables[i]: r}))
    return out
