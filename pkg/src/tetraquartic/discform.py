"""The discriminant group ``A_M = M*/M`` with its finite quadratic and bilinear forms.

Elements of ``M*`` are stored as rational coordinate vectors in the basis of
``M`` (the rows of the inverse Gram matrix are the dual basis).  The group is
presented on three generators: ``eps1`` (dual of ``e1``), ``lam23`` and
``lam24`` (duals of ``l23``, ``l24``), of orders 8, 4, 4.  An element is the
triple of exponents ``(a mod 8, b mod 4, c mod 4)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import DegenerateLattice, LiftMismatch, NotIsometry
from .exactmath.matrix import inverse, mat_mul, transpose
from .lattice import M_BASIS

GENERATOR_NAMES = ("eps1", "lam23", "lam24")
GENERATOR_BASIS = ("E1", "L23", "L24")
ORDERS = (8, 4, 4)

# names of the dual basis elements, aligned with the basis of M
DUAL_NAMES = {"L12": "lam12", "L13": "lam13", "L14": "lam14", "L23": "lam23", "L24": "lam24",
              "L34": "lam34", "E1": "eps1", "E2": "eps2", "E3": "eps3", "E4": "eps4", "R1": "rho"}


def _frac_part(x):
    return x - (x.numerator // x.denominator)


def mod1(x):
    """Representative of ``x + Z`` in ``[0, 1)``."""
    return _frac_part(Fraction(x))


def mod2(x):
    """Representative of ``x + 2Z`` in ``[0, 2)``."""
    x = Fraction(x)
    return x - 2 * (x // 2)


def signed(x, modulus):
    """Representative in ``(-modulus/2, modulus/2]``, for printing next to the canonical one."""
    x = Fraction(x)
    return x - modulus if x > Fraction(modulus, 2) else x


class FiniteQuadForm:
    """``A_M`` with ``q`` valued in ``Q/2Z`` and ``b`` valued in ``Q/Z``."""

    def __init__(self, gram, dual_vectors, generator_names=GENERATOR_NAMES, orders=ORDERS):
        self.gram = [list(r) for r in gram]
        self.n = len(gram)
        self.generator_names = tuple(generator_names)
        self.orders = tuple(orders)
        self.generator_vectors = [tuple(Fraction(x) for x in v) for v in dual_vectors]
        self.order = 1
        for o in self.orders:
            self.order *= o
        self._table = {}          # fractional-part key -> triple
        self._vector = {}         # triple -> a rational representative
        for triple in self.elements():
            v = self.lift(triple)
            key = tuple(_frac_part(x) for x in v)
            if key in self._table:
                raise DegenerateLattice(f"generators are dependent: {triple} ~ {self._table[key]}")
            self._table[key] = triple
            self._vector[triple] = v
        self.q_table = {x: self._q_direct(self._vector[x]) for x in self.elements()}
        gens = self.generators()
        self._b_gens = [[mod1(self._pair(self._vector[g], self._vector[h])) for h in gens] for g in gens]
        self.b_table = {}
        for x in self.elements():
            for y in self.elements():
                self.b_table[(x, y)] = self._b_from_gens(x, y)

    # group structure --------------------------------------------------------

    def elements(self):
        return list(product(*(range(o) for o in self.orders)))

    def generators(self):
        k = len(self.orders)
        return [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]

    def zero(self):
        return (0,) * len(self.orders)

    def add(self, x, y):
        return tuple((a + b) % o for a, b, o in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % o for a, o in zip(x, self.orders))

    def scale(self, k, x):
        return tuple((k * a) % o for a, o in zip(x, self.orders))

    def combo(self, coeffs):
        """Element with the given generator coefficients (reduced)."""
        return tuple(int(c) % o for c, o in zip(coeffs, self.orders))

    def element_order(self, x):
        k, y = 1, x
        while y != self.zero():
            y = self.add(y, x)
            k += 1
        return k

    # lifting and reduction --------------------------------------------------

    def lift(self, x):
        v = [Fraction(0)] * self.n
        for c, g in zip(x, self.generator_vectors):
            if c:
                v = [a + c * b for a, b in zip(v, g)]
        return tuple(v)

    def reduce(self, vector):
        """Class of a rational vector of ``M*`` modulo ``M``."""
        key = tuple(_frac_part(Fraction(x)) for x in vector)
        try:
            return self._table[key]
        except KeyError:
            raise ValueError(f"{vector} is not in the dual lattice") from None

    def _pair(self, u, v):
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(self.n) if u[i] for j in range(self.n) if v[j])

    def _q_direct(self, v):
        return mod2(self._pair(v, v))

    def _b_from_gens(self, x, y):
        s = Fraction(0)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                if a and b:
                    s += a * b * self._b_gens[i][j]
        return mod1(s)

    def q(self, x):
        return self.q_table[x]

    def b(self, x, y):
        return self.b_table[(x, y)]

    def q_vector(self, v):
        return mod2(self._pair(v, v))

    def b_vector(self, u, v):
        return mod1(self._pair(u, v))


def build_disc_group(lat):
    """Discriminant group of a nondegenerate even lattice, on the named generators."""
    gram = [list(r) for r in (lat.gram if hasattr(lat, "gram") else lat)]
    try:
        ginv = inverse(gram)
    except ZeroDivisionError:
        raise DegenerateLattice("Gram matrix is singular") from None
    names = getattr(lat, "basis_names", M_BASIS)
    rows = [ginv[names.index(b)] for b in GENERATOR_BASIS]
    fq = FiniteQuadForm(gram, rows)
    fq.dual_basis = {DUAL_NAMES.get(n, n): tuple(r) for n, r in zip(names, ginv)}
    fq.basis_names = tuple(names)
    return fq


# dual-basis lifts and the reduction relations -------------------------------

PRINTED_LIFTS = {
    # multiple of a generator -> integer vector in M, keyed by basis name
    ("eps1", 8): {"E1": -13, "E2": 1, "E3": 1, "E4": 1, "R1": 6, "L12": -6, "L13": -6, "L14": -6,
                  "L23": 4, "L24": 4, "L34": 4},
    ("lam23", 4): {"E1": 2, "E4": 2, "L12": 1, "L13": 1, "L14": 2, "L23": -2, "L24": 1, "L34": 1},
    ("lam24", 4): {"E1": 2, "E3": 2, "L12": 1, "L13": 2, "L14": 1, "L23": 1, "L24": -2, "L34": 1},
}

PRINTED_RELATIONS = {
    # dual basis element -> coefficients on (eps1, lam23, lam24)
    "lam12": (-2, -1, -1),
    "lam13": (2, 0, 1),
    "lam14": (2, 1, 0),
    "lam34": (4, -1, -1),
    "eps2": (3, 2, 2),
    "eps3": (3, 0, 2),
    "eps4": (3, 2, 0),
    "rho": (2, 0, 0),
}


@dataclass(frozen=True)
class LiftCheck:
    name: str
    expected: tuple
    computed: tuple

    @property
    def holds(self):
        return self.expected == self.computed


def verify_dual_lifts(fq, raise_on_failure=True):
    report = []
    names = fq.basis_names
    for (gen, k), terms in PRINTED_LIFTS.items():
        expected = tuple(terms.get(n, 0) for n in names)
        computed = tuple(k * x for x in fq.dual_basis[gen])
        report.append(LiftCheck(f"{k}*{gen}", expected, computed))
    for name, coeffs in PRINTED_RELATIONS.items():
        expected = fq.combo(coeffs)
        computed = fq.reduce(fq.dual_basis[name])
        report.append(LiftCheck(f"{name}={_fmt_combo(coeffs)}", expected, computed))
    for gen, k in ((g, o) for g, o in zip(fq.generator_names, fq.orders)):
        v = tuple(k * x for x in fq.dual_basis[gen])
        report.append(LiftCheck(f"{k}*{gen}=0", fq.zero(), fq.reduce(v)))
    if raise_on_failure:
        for c in report:
            if not c.holds:
                raise LiftMismatch(c.name, f"expected {c.expected}, got {c.computed}")
    return report


def _fmt_combo(coeffs):
    parts = []
    for c, n in zip(coeffs, GENERATOR_NAMES):
        if c:
            parts.append(n if c == 1 else f"-{n}" if c == -1 else f"{c}*{n}")
    return "+".join(parts).replace("+-", "-") or "0"


# automorphisms ----------------------------------------------------------------

@dataclass(frozen=True)
class DiscAutomorphism:
    """A group endomorphism given by the images of the three generators."""

    images: tuple
    orders: tuple = ORDERS
    name: str = field(default="", compare=False, hash=False)

    def __call__(self, x):
        out = [0] * len(self.orders)
        for c, img in zip(x, self.images):
            for k in range(len(out)):
                out[k] += c * img[k]
        return tuple(v % o for v, o in zip(out, self.orders))

    def compose(self, other):
        """``self o other``."""
        return DiscAutomorphism(tuple(self(img) for img in other.images), self.orders)

    def __matmul__(self, other):
        return self.compose(other)

    def is_well_defined(self):
        # the image of a generator of order o must be killed by o
        for img, o in zip(self.images, self.orders):
            if any((o * c) % m for c, m in zip(img, self.orders)):
                return False
        return True

    def is_bijective(self):
        if not self.is_well_defined():
            return False
        seen = {self(x) for x in product(*(range(o) for o in self.orders))}
        n = 1
        for o in self.orders:
            n *= o
        return len(seen) == n

    def preserves(self, fq):
        return all(fq.q(self(x)) == fq.q(x) for x in fq.elements())


def identity_auto(orders=ORDERS):
    k = len(orders)
    return DiscAutomorphism(tuple(tuple(1 if j == i else 0 for j in range(k)) for i in range(k)), orders, "id")


def _auto(name, *images):
    return DiscAutomorphism(tuple(tuple(c % o for c, o in zip(img, ORDERS)) for img in images), ORDERS, name)


# The actions printed for the transpositions, the mirror and the covering involution,
# written as images of (eps1, lam23, lam24).
PRINTED_ACTIONS = {
    "(12)": _auto("(12)", (1, 2, 2), (4, 0, 1), (4, 1, 0)),
    "(13)": _auto("(13)", (1, 0, 2), (0, -1, -1), (0, 0, 1)),
    "(14)": _auto("(14)", (1, 2, 0), (0, 1, 0), (0, -1, -1)),
    "(23)": _auto("(23)", (1, 0, 0), (0, 1, 0), (4, -1, -1)),
    "(24)": _auto("(24)", (1, 0, 0), (4, -1, -1), (0, 0, 1)),
    "(34)": _auto("(34)", (1, 0, 0), (0, 0, 1), (0, 1, 0)),
    "mu": _auto("mu", (1, 0, 0), (0, -1, 0), (0, 0, -1)),
    "i": _auto("i", (-1, 0, 0), (0, -1, 0), (0, 0, -1)),
}


def enumerate_autos(fq, jobs=1):
    """All automorphisms of ``A_M`` preserving ``q``, by exhaustive search.

    Generator images are filtered by order and by the value of ``q`` on each
    generator, and pairs by ``b`` between generators (both necessary for any
    ``q``-preserving automorphism); the survivors are checked against the full
    ``q`` table and for bijectivity.
    """
    gens = fq.generators()
    elems = fq.elements()
    cands = []
    for g, o in zip(gens, fq.orders):
        cands.append([x for x in elems if fq.element_order(x) == o and fq.q(x) == fq.q(g)])
    found = []
    for x0 in cands[0]:
        if fq.b(x0, x0) != fq.b(gens[0], gens[0]):
            continue
        for x1 in cands[1]:
            if fq.b(x0, x1) != fq.b(gens[0], gens[1]):
                continue
            for x2 in cands[2]:
                if fq.b(x0, x2) != fq.b(gens[0], gens[2]) or fq.b(x1, x2) != fq.b(gens[1], gens[2]):
                    continue
                auto = DiscAutomorphism((x0, x1, x2), fq.orders)
                if auto.is_bijective() and auto.preserves(fq):
                    found.append(auto)
    return frozenset(found)


def closure(generators, orders=ORDERS):
    """Subgroup generated by a set of automorphisms (breadth-first products)."""
    ident = identity_auto(orders)
    group = {ident}
    frontier = [ident]
    gens = [DiscAutomorphism(g.images, g.orders) for g in generators]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = g.compose(a)
                if c not in group:
                    group.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(group)


def induced_disc_auto(matrix, fq, name=""):
    """Action on ``A_M`` of an isometry of ``M`` acting on coordinate columns.

    An isometry ``T`` extends Q-linearly and maps ``M*`` onto itself, so in
    ``M``-coordinates the class of ``v`` goes to the class of ``T v``.  (In
    dual coordinates the same map is the inverse transpose.)
    """
    matrix = getattr(matrix, "matrix", matrix)
    t = [list(r) for r in matrix]
    if mat_mul(mat_mul(transpose(t), fq.gram), t) != fq.gram:
        raise NotIsometry("matrix does not preserve the Gram matrix")
    images = []
    for v in fq.generator_vectors:
        w = [sum(t[i][j] * v[j] for j in range(fq.n)) for i in range(fq.n)]
        images.append(fq.reduce(w))
    return DiscAutomorphism(tuple(images), fq.orders, name)


def generator_table(fq):
    """``q`` on generators and ``b`` on generator pairs, canonical and signed forms."""
    rows = []
    gens = fq.generators()
    for g, n in zip(gens, fq.generator_names):
        rows.append((f"q({n})", fq.q(g), signed(fq.q(g), 2)))
    for i, j in ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)):
        n1, n2 = fq.generator_names[i], fq.generator_names[j]
        val = fq.b(gens[i], gens[j])
        rows.append((f"b({n1},{n2})", val, signed(val, 1)))
    return rows
