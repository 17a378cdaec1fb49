"""Dense univariate polynomials over the rationals, resultants and root tools."""

from fractions import Fraction
from functools import reduce
from math import gcd, inf

from ..errors import DegreeZero, ZeroPolynomial
from .matrix import bareiss_det
from .multipoly import MultiPoly


class UniPoly:
    """Coefficients are stored constant-term first; the zero polynomial has none.

    ``degree`` of the zero polynomial is ``-inf`` rather than an integer sentinel.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="x"):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_roots(cls, roots, var="x"):
        p = cls([1], var)
        for r in roots:
            p = p * cls([-r, 1], var)
        return p

    @classmethod
    def from_multipoly(cls, poly, var=None):
        used = poly.used_variables()
        if var is None:
            if len(used) > 1:
                raise ValueError(f"{poly} is not univariate")
            var = used[0] if used else "x"
        elif any(v != var for v in used):
            raise ValueError(f"{poly} involves variables other than {var!r}")
        parts = poly.coeffs_in(var) if var in poly.variables else {0: poly}
        deg = max(parts) if parts else -1
        return cls([parts[k].constant_value() if k in parts else 0 for k in range(deg + 1)], var)

    def to_multipoly(self, variables=None):
        variables = tuple(variables) if variables is not None else (self.var,)
        i = variables.index(self.var)
        n = len(variables)
        return MultiPoly(variables, {tuple(k if j == i else 0 for j in range(n)): c for k, c in enumerate(self.coeffs)})

    # queries -------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -inf

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(map(str, self.coeffs))}, {self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other], self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = UniPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if not o:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(o.coeffs) - 1
        if len(rem) - 1 < dq:
            return UniPoly([], self.var), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / o.coeffs[-1]
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            quot[k - dq] = c
            if c:
                for j, y in enumerate(o.coeffs):
                    rem[k - dq + j] -= c * y
        return UniPoly(quot, self.var), UniPoly(rem[:dq], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self):
        if not self.coeffs:
            return self
        inv = 1 / self.coeffs[-1]
        return UniPoly([c * inv for c in self.coeffs], self.var)

    def primitive(self):
        """Integer-coefficient primitive associate with positive leading coefficient."""
        if not self.coeffs:
            return self
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints)
        if ints[-1] < 0:
            g = -g
        return UniPoly([Fraction(c // g) for c in ints], self.var)

    def compose(self, other):
        acc = UniPoly([], self.var)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def valuation(self):
        """Multiplicity of the root 0."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return inf

    def shift_down(self, k):
        """Divide by ``x**k`` (requires ``k <= valuation``)."""
        if any(self.coeffs[:k]):
            raise ValueError(f"x^{k} does not divide {self}")
        return UniPoly(self.coeffs[k:], self.var)


def poly_gcd(p, q):
    """Monic gcd (the gcd of two zero polynomials is zero)."""
    a, b = p, q
    while b:
        a, b = b, a % b
        # keep coefficients tame
        if b:
            b = b.primitive()
    return a.monic() if a else a


def resultant(p, q):
    """Resultant as the Sylvester determinant, via Bareiss elimination."""
    if not p or not q:
        raise ZeroPolynomial("resultant with the zero polynomial")
    return bareiss_det(sylvester_matrix(p.coeffs, q.coeffs), zero=Fraction(0))


def sylvester_matrix(pc, qc, zero=0):
    """Sylvester matrix from coefficient lists given constant term first."""
    m, n = len(pc) - 1, len(qc) - 1
    size = m + n
    if size == 0:
        return []
    rows = []
    ph, qh = list(reversed(pc)), list(reversed(qc))
    for i in range(n):
        rows.append([zero] * i + ph + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qh + [zero] * (size - n - 1 - i))
    return rows


def resultant_in(p, q, var):
    """Resultant of two multivariate polynomials with respect to ``var``.

    The answer is a ``MultiPoly`` in the remaining variables.
    """
    if not p or not q:
        raise ZeroPolynomial("resultant with the zero polynomial")
    p, q = p._align(q)
    universe = p.variables
    zero = MultiPoly.zero(universe)
    pp, qq = p.coeffs_in(var), q.coeffs_in(var)
    m, n = max(pp), max(qq)
    pc = [pp.get(k, zero) for k in range(m + 1)]
    qc = [qq.get(k, zero) for k in range(n + 1)]
    if m + n == 0:
        return MultiPoly.constant(1, universe)
    return bareiss_det(sylvester_matrix(pc, qc, zero), exact_div=lambda a, b: a.exact_div(b), zero=zero)


def discriminant_univariate(p):
    """``(-1)^(n(n-1)/2) Res(p, p') / lc(p)`` for ``deg p = n >= 1``."""
    if not p or p.degree < 1:
        raise DegreeZero("discriminant needs degree >= 1")
    n = p.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


def squarefree_part(p):
    """``p / gcd(p, p')`` made monic; its degree counts distinct complex roots."""
    if not p:
        raise ZeroPolynomial("squarefree part of zero")
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic() if g else p.monic()


def count_distinct_roots(p):
    return squarefree_part(p).degree


def _sturm_sequence(p):
    seq = [p, p.derivative()]
    while seq[-1]:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        # rescale by a positive constant only, so signs survive
        seq.append(r * (1 / abs(r.lc)))
    return seq


def _sign_changes(seq, x):
    signs = []
    for s in seq:
        v = s(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _root_bound(p):
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def real_root_count(p):
    if not p:
        raise ZeroPolynomial("real roots of zero")
    sq = squarefree_part(p)
    if sq.degree < 1:
        return 0
    seq = _sturm_sequence(sq)
    b = _root_bound(sq)
    return _sign_changes(seq, -b) - _sign_changes(seq, b)


def rational_roots(p):
    """All rational roots of ``p``, sorted, each listed once.

    Real roots are isolated with a Sturm sequence and each isolating interval
    is shrunk below ``1/lc`` (``lc`` of the primitive integer form); a rational
    root must then be the unique point ``k/lc`` inside it, which is tested
    exactly.
    """
    if not p:
        raise ZeroPolynomial("rational roots of zero")
    sq = squarefree_part(p)
    roots = []
    if sq.degree < 1:
        return roots
    if sq.coeffs[0] == 0:
        roots.append(Fraction(0))
        sq = sq.shift_down(1)
        if sq.degree < 1:
            return roots
    prim = sq.primitive()
    lc = int(prim.lc)
    seq = _sturm_sequence(prim)
    b = _root_bound(prim)
    width_goal = Fraction(1, lc)
    stack = [(-b, b, _sign_changes(seq, -b), _sign_changes(seq, b))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1 and hi - lo < width_goal:
            # at most one k with lo*lc < k <= hi*lc
            k = (lo * lc).__floor__() + 1
            cand = Fraction(k, lc)
            if lo < cand <= hi and prim(cand) == 0:
                roots.append(cand)
            continue
        mid = (lo + hi) / 2
        if prim(mid) == 0:
            roots.append(mid)
            # nudge off the root; the squarefree Sturm count stays valid
            eps = (hi - lo) / 1024
            while prim(mid + eps) == 0 or prim(mid - eps) == 0:
                eps /= 2
            vml, vmr = _sign_changes(seq, mid - eps), _sign_changes(seq, mid + eps)
            stack.append((lo, mid - eps, vlo, vml))
            stack.append((mid + eps, hi, vmr, vhi))
            continue
        vmid = _sign_changes(seq, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    return sorted(set(roots))
