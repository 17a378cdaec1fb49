"""Binary forms: homogeneous polynomials in two variables ``(s, t)``.

``coeffs[k]`` is the coefficient of ``s**(degree - k) * t**k``.  Roots are
points of the projective line; ``t = 0`` is the point ``(1:0)``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .multipoly import MultiPoly
from .unipoly import UniPoly, squarefree_part


class BinaryForm:
    __slots__ = ("degree", "coeffs", "names")

    def __init__(self, coeffs, degree=None, names=("s", "t")):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if degree is None:
            degree = len(cs) - 1
        if degree < 0:
            raise ValueError("a binary form needs a nonnegative degree")
        if len(cs) > degree + 1:
            if any(cs[degree + 1:]):
                raise ValueError("too many coefficients for the degree")
            cs = cs[:degree + 1]
        cs += [Fraction(0)] * (degree + 1 - len(cs))
        self.degree = degree
        self.coeffs = tuple(cs)
        self.names = tuple(names)

    @classmethod
    def from_multipoly(cls, poly, s="s", t="t", degree=None):
        """Read a homogeneous polynomial in ``s, t`` (other variables must be absent)."""
        extra = [v for v in poly.used_variables() if v not in (s, t)]
        if extra:
            raise ValueError(f"binary form involves {extra}")
        if not poly.is_homogeneous():
            raise ValueError(f"{poly} is not homogeneous")
        if degree is None:
            degree = poly.total_degree() if poly else 0
        cs = [poly.coefficient({s: degree - k, t: k}) for k in range(degree + 1)]
        return cls(cs, degree, (s, t))

    def to_multipoly(self):
        s, t = self.names
        return MultiPoly((s, t), {(self.degree - k, k): c for k, c in enumerate(self.coeffs)})

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return f"BinaryForm({self.to_multipoly()}, degree={self.degree})"

    def __call__(self, s, t):
        return sum(c * s ** (self.degree - k) * t ** k for k, c in enumerate(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BinaryForm([c * other for c in self.coeffs], self.degree, self.names)
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BinaryForm(out, self.degree + other.degree, self.names)

    __rmul__ = __mul__

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("adding binary forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.degree, self.names)

    def __neg__(self):
        return BinaryForm([-c for c in self.coeffs], self.degree, self.names)

    def __sub__(self, other):
        return self + (-other)

    def dehomogenize(self):
        """``f(1, t)`` as a univariate polynomial in ``t``."""
        return UniPoly(self.coeffs, self.names[1])

    def exact_div(self, other):
        """Quotient form; raises ValueError when ``other`` does not divide ``self``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero form")
        if self.is_zero():
            return BinaryForm([], max(self.degree - other.degree, 0), self.names)
        d = self.degree - other.degree
        if d < 0:
            raise ValueError("divisor has larger degree")
        q, r = divmod(self.dehomogenize(), other.dehomogenize())
        if r or (q.degree > d):
            raise ValueError("binary form division is not exact")
        return BinaryForm(q.coeffs, d, self.names)

    def divides(self, other):
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def t_valuation(self):
        """Multiplicity of the root ``(1:0)``."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.degree + 1

    def root_multiplicity(self, point):
        """Multiplicity of the projective root ``point = (s0, t0)`` (0 if not a root)."""
        s0, t0 = point
        lin = BinaryForm([Fraction(t0), Fraction(-s0)], 1, self.names)  # t0*s - s0*t
        f, m = self, 0
        while not f.is_zero() and lin.divides(f):
            f = f.exact_div(lin)
            m += 1
        return m


@dataclass(frozen=True)
class SquareRoot:
    """``form == scalar * root**2`` with ``root`` rational."""

    scalar: Fraction
    root: BinaryForm

    def is_rational_square(self):
        from .rational import rational_sqrt

        return rational_sqrt(self.scalar) is not None


def _series_sqrt_one(u, n):
    """First ``n + 1`` coefficients of ``sqrt(u)`` for a power series with ``u[0] == 1``."""
    g = [Fraction(1)]
    for k in range(1, n + 1):
        # coefficient k of g*g must equal u[k]
        acc = u[k] if k < len(u) else Fraction(0)
        acc -= sum(g[i] * g[k - i] for i in range(1, k))
        g.append(acc / 2)
    return g


def is_perfect_square(f):
    """Decide whether ``f = c * g**2`` with ``g`` rational and ``c`` a rational scalar.

    Equivalently, ``f`` is a square over the field obtained by adjoining one
    square root of its leading coefficient.  The power of ``t`` dividing ``f``
    must be even; the remaining factor is normalised to constant term 1 at
    ``s = 1`` and its formal square root is built coefficient by coefficient,
    then squared back for an exact check.  Returns ``SquareRoot`` or None.
    """
    if f.is_zero():
        return SquareRoot(Fraction(1), BinaryForm([], f.degree // 2, f.names)) if f.degree % 2 == 0 else None
    if f.degree % 2:
        return None
    j = f.t_valuation()
    if j % 2:
        return None
    c = f.coeffs[j]
    u = [x / c for x in f.coeffs[j:]]
    half = (f.degree - j) // 2
    g = _series_sqrt_one(u, half)
    root = BinaryForm([Fraction(0)] * (j // 2) + g, f.degree // 2, f.names)
    if root * root * c != f:
        return None
    return SquareRoot(c, root)


def distinct_root_count(f):
    """Number of distinct roots of a nonzero form on the projective line."""
    if f.is_zero():
        raise ValueError("the zero form vanishes everywhere")
    # roots with t != 0 are the roots of f(s, 1), whose coefficients run backwards
    rev = UniPoly(tuple(reversed(f.coeffs)), f.names[0])
    finite = squarefree_part(rev).degree if rev.degree >= 1 else 0
    at_one_zero = 1 if not f.coeffs[0] else 0
    return finite + at_one_zero
