"""Integer isometries of ``M``: the printed involutions, the S4 and mirror actions,
and a decision procedure for finite versus infinite order.

Matrices act on coordinate columns: column ``k`` is the image of basis vector ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import lcm

from .errors import ImageMismatch, IsometryCheckFailed, NotIsometry
from .exactmath.matrix import (
    bareiss_det,
    as_int_matrix,
    charpoly,
    identity,
    inverse,
    is_identity,
    mat_mul,
    mat_pow,
    mat_vec,
    trace,
    transpose,
)
from .exactmath.unipoly import UniPoly
from .lattice import EDGES, LatticeVector, _edge_name, m_lattice, standard_registry


def gram_defect(lattice, matrix):
    """First entry ``(i, j, value)`` of ``T^t G T - G`` that is nonzero, or None."""
    g = [list(r) for r in lattice.gram]
    d = mat_mul(mat_mul(transpose(matrix), g), matrix)
    for i in range(lattice.rank):
        for j in range(lattice.rank):
            if d[i][j] != g[i][j]:
                return (i, j, d[i][j] - g[i][j])
    return None


class IntegerIsometry:
    """A square integer matrix preserving the Gram matrix of ``lattice``."""

    def __init__(self, lattice, matrix, name=""):
        m = [[int(x) for x in row] for row in matrix]
        if len(m) != lattice.rank or any(len(r) != lattice.rank for r in m):
            raise ValueError("matrix size does not match the lattice rank")
        defect = gram_defect(lattice, m)
        if defect is not None:
            i, j, d = defect
            raise NotIsometry(f"{name or 'matrix'}: (T^t G T - G)[{i}][{j}] = {d}")
        self.lattice = lattice
        self.matrix = tuple(tuple(r) for r in m)
        self.name = name

    @property
    def rank(self):
        return self.lattice.rank

    def rows(self):
        return [list(r) for r in self.matrix]

    def apply(self, v):
        coords = v.coords if isinstance(v, LatticeVector) else v
        return LatticeVector(self.lattice, mat_vec(self.rows(), list(coords)))

    __call__ = apply

    def column(self, k):
        return tuple(r[k] for r in self.matrix)

    def compose(self, other, name=None):
        """``self o other`` (apply ``other`` first)."""
        return IntegerIsometry(self.lattice, mat_mul(self.rows(), other.rows()),
                               name if name is not None else f"{self.name}*{other.name}")

    __matmul__ = compose

    def inverse(self):
        return IntegerIsometry(self.lattice, as_int_matrix(inverse(self.rows())), f"{self.name}^-1")

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        return IntegerIsometry(self.lattice, mat_pow(self.rows(), k), f"{self.name}^{k}")

    def det(self):
        return bareiss_det(self.rows())

    def charpoly(self):
        return charpoly(self.rows())

    def is_identity(self):
        return is_identity(self.rows())

    def __eq__(self, other):
        return isinstance(other, IntegerIsometry) and self.matrix == other.matrix and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"IntegerIsometry({self.name or '?'}, rank={self.rank})"


def identity_isometry(lattice=None):
    lattice = lattice or m_lattice()
    return IntegerIsometry(lattice, identity(lattice.rank), "id")


# printed matrices, stored verbatim (row by row as typeset) ---------------------

ALPHA = (
    (-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (-1, -1, 0, 0, 0, 0, 1, 0, 0, -1, 0),
    (1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 1),
    (0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0),
    (-1, -1, 1, 0, 0, 0, 0, 0, 0, -1, 0),
    (0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0),
    (1, 1, 0, 1, 0, 0, 0, 0, 0, 2, 0),
)

BETA = (
    (-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (-1, 0, -1, 0, 0, 0, 1, 0, -1, 0, 0),
    (0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 2, 0, 1),
    (1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0),
    (-1, 1, -1, 0, 0, 0, 0, 0, -1, 0, 0),
    (0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0),
    (1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0),
    (1, 0, 1, 0, 1, 0, 0, 0, 2, 0, 0),
)

ALPHA_BETA = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, -1, 0, 1, 0, 0),
    (0, 1, 0, 0, 0, -1, -1, 0, -1, 0, 0),
    (1, 0, 0, 0, 1, 2, 1, 0, 3, 0, 0),
    (0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 1, 1, 0, 2, 0, 1),
    (1, 0, 0, 0, 0, 1, 0, 0, 2, 1, 0),
    (-1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0),
    (0, 0, 0, 0, 0, 2, 1, 1, 2, 0, 0),
)

# the fifteen images of the involution attached to node 4, as {name: coefficient}
PHI4_IMAGES = {
    "L12": {"R3": 1}, "R3": {"L12": 1},
    "L23": {"R1": 1}, "R1": {"L23": 1},
    "L13": {"R2": 1}, "R2": {"L13": 1},
    "L14": {"E1": 1}, "E1": {"L14": 1},
    "L24": {"E2": 1}, "E2": {"L24": 1},
    "L34": {"E3": 1}, "E3": {"L34": 1},
    "R4": {"H": 1, "E4": -1, "R4": -1},
    "H": {"R1": 1, "R2": 1, "R3": 2, "R4": -1, "E1": 1, "E2": 1, "L12": 1, "L34": 1, "L14": 2, "L24": 2},
    "E4": {"R1": 2, "E1": -1, "E2": 1, "E3": 1, "E4": -1, "L23": 2, "L24": 1, "L34": 1, "L14": -1},
}


@dataclass(frozen=True)
class ImageCheck:
    name: str
    expected: tuple
    computed: tuple

    @property
    def holds(self):
        return self.expected == self.computed


def verify_alpha_images(alpha, reg=None, raise_on_failure=True):
    """Check the fifteen prescribed images of the node-4 involution against ``alpha``."""
    reg = reg or standard_registry()
    report = []
    for name, terms in PHI4_IMAGES.items():
        expected = reg.combine(terms).coords
        computed = alpha.apply(reg[name]).coords
        report.append(ImageCheck(name, expected, computed))
    if raise_on_failure:
        for c in report:
            if not c.holds:
                raise ImageMismatch(c.name, c.expected, c.computed)
    return report


def phi4_from_images(reg=None):
    """Matrix of the node-4 involution built column by column from the prescribed images."""
    reg = reg or standard_registry()
    lat = reg.lattice
    cols = [reg.combine(PHI4_IMAGES[n]).coords for n in lat.basis_names]
    return IntegerIsometry(lat, transpose(cols), "phi4")


@dataclass
class PrintedMatrices:
    alpha: IntegerIsometry
    beta: IntegerIsometry
    convention: str            # "column" or "row": how the printed arrays act
    notes: list = field(default_factory=list)


def _try_convention(lat, printed, transpose_it, name):
    m = transpose([list(r) for r in printed]) if transpose_it else [list(r) for r in printed]
    defect = gram_defect(lat, m)
    if defect is not None:
        return None, defect
    return IntegerIsometry(lat, m, name), None


def load_printed_matrices(reg=None):
    """Load the printed matrices and fix their action convention.

    The printed arrays are tried as column-action and then as row-action
    matrices; the first convention under which ``alpha`` passes the Gram test
    and reproduces all fifteen prescribed images wins and is applied to ``beta``
    too.  If neither works the image-derived matrix replaces ``alpha`` and its
    conjugate by the transposition (34) replaces ``beta``; the failure is noted.
    """
    reg = reg or standard_registry()
    lat = reg.lattice
    notes = []
    for conv, flip in (("column", False), ("row", True)):
        alpha, defect = _try_convention(lat, ALPHA, flip, "alpha")
        if alpha is None:
            notes.append(f"{conv}: alpha fails the Gram test at {defect}")
            continue
        if not all(c.holds for c in verify_alpha_images(alpha, reg, raise_on_failure=False)):
            notes.append(f"{conv}: alpha misses some prescribed images")
            continue
        beta, defect = _try_convention(lat, BETA, flip, "beta")
        if beta is None:
            raise IsometryCheckFailed("beta", defect[:2], defect[2])
        return PrintedMatrices(alpha, beta, conv, notes)
    alpha = phi4_from_images(reg)
    t34 = build_s4_action((1, 2, 4, 3), reg)
    beta = IntegerIsometry(lat, mat_mul(mat_mul(t34.rows(), alpha.rows()), t34.rows()), "beta")
    notes.append("printed alpha unusable; using the image-derived matrix")
    return PrintedMatrices(alpha, beta, "derived", notes)


def load_involutions(reg=None):
    """``(alpha, beta)`` as isometries in column-action form.

    Raises IsometryCheckFailed naming the first defective entry when the printed
    ``alpha`` is not an isometry under either convention.
    """
    lat = (reg or standard_registry()).lattice
    for flip in (False, True):
        m = transpose([list(r) for r in ALPHA]) if flip else [list(r) for r in ALPHA]
        if gram_defect(lat, m) is None:
            break
    else:
        d = gram_defect(lat, [list(r) for r in ALPHA])
        raise IsometryCheckFailed("alpha", d[:2], d[2])
    pm = load_printed_matrices(reg)
    return pm.alpha, pm.beta


# symmetric group and mirror ----------------------------------------------------

def _perm_tuple(sigma):
    """Accept a tuple ``(s(1), s(2), s(3), s(4))`` or a dict ``{i: s(i)}``."""
    if isinstance(sigma, dict):
        sigma = tuple(sigma.get(i, i) for i in (1, 2, 3, 4))
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != [1, 2, 3, 4]:
        raise ValueError(f"{sigma} is not a permutation of 1..4")
    return sigma


def transposition(i, j):
    s = [1, 2, 3, 4]
    s[i - 1], s[j - 1] = j, i
    return tuple(s)


def build_s4_action(sigma, reg=None):
    """Isometry permuting indices: ``L_ij -> L_s(i)s(j)``, ``E_i -> E_s(i)``, ``R1 -> R_s(1)``."""
    reg = reg or standard_registry()
    s = _perm_tuple(sigma)
    images = {}
    for i, j in EDGES:
        a, b = sorted((s[i - 1], s[j - 1]))
        images[_edge_name(i, j)] = reg[_edge_name(a, b)]
    for i in (1, 2, 3, 4):
        images[f"E{i}"] = reg[f"E{s[i - 1]}"]
    images["R1"] = reg[f"R{s[0]}"]
    cols = [images[n].coords for n in reg.lattice.basis_names]
    label = "".join(str(x) for x in s)
    return IntegerIsometry(reg.lattice, transpose(cols), f"S4[{label}]")


def build_mirror(reg=None):
    """Isometry exchanging ``E_i`` with ``R_i`` and each edge with the opposite edge.

    Raises ImageMismatch if the hyperplane class does not go to ``Hv``.
    """
    reg = reg or standard_registry()
    images = {}
    for i, j in EDGES:
        k, l = (x for x in (1, 2, 3, 4) if x not in (i, j))
        images[_edge_name(i, j)] = reg[_edge_name(k, l)]
    for i in (1, 2, 3, 4):
        images[f"E{i}"] = reg[f"R{i}"]
    images["R1"] = reg["E1"]
    cols = [images[n].coords for n in reg.lattice.basis_names]
    mirror = IntegerIsometry(reg.lattice, transpose(cols), "mirror")
    for i in (2, 3, 4):
        if mirror.apply(reg[f"R{i}"]) != reg[f"E{i}"]:
            raise ImageMismatch(f"R{i}", reg[f"E{i}"].coords, mirror.apply(reg[f"R{i}"]).coords)
    img = mirror.apply(reg["H"])
    if img != reg["Hv"]:
        raise ImageMismatch("H", reg["Hv"].coords, img.coords)
    return mirror


# order decision -------------------------------------------------------------------

def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_indices(max_degree):
    """All ``n`` with ``phi(n) <= max_degree`` (``phi(n) >= sqrt(n/2)`` bounds the search)."""
    return [n for n in range(1, 2 * max_degree * max_degree + 3) if euler_phi(n) <= max_degree]


_CYCLO_CACHE = {}


def cyclotomic_polynomial(n):
    if n not in _CYCLO_CACHE:
        p = UniPoly([-1] + [0] * (n - 1) + [1], "x")
        for d in range(1, n):
            if n % d == 0:
                p = p.exact_div(cyclotomic_polynomial(d))
        _CYCLO_CACHE[n] = p
    return _CYCLO_CACHE[n]


@dataclass
class OrderCertificate:
    """Verdict on the order of an isometry with its characteristic-polynomial evidence."""

    finite: bool
    order: int | None
    charpoly: tuple                      # constant term first
    cyclotomic_factors: tuple            # ((n, multiplicity), ...)
    residual_factor: tuple               # non-cyclotomic cofactor, constant term first
    trace_sequence: tuple = ()           # trace(I^k), k = 1..20
    entry_growth: tuple = ()             # max |entry| of I^(2^j), j = 0..5

    @property
    def verdict(self):
        return f"finite({self.order})" if self.finite else "infinite"

    @property
    def has_noncyclotomic_factor(self):
        return len(self.residual_factor) > 1


def split_cyclotomic(coeffs, max_degree=None):
    """Divide out cyclotomic factors; returns ``(((n, mult), ...), cofactor)``."""
    p = UniPoly(coeffs, "x")
    max_degree = max_degree if max_degree is not None else p.degree
    found = []
    for n in cyclotomic_indices(max_degree):
        phi = cyclotomic_polynomial(n)
        mult = 0
        while p.degree >= phi.degree:
            q, r = divmod(p, phi)
            if r:
                break
            p, mult = q, mult + 1
        if mult:
            found.append((n, mult))
    return tuple(found), p


def decide_order(iso, trace_terms=20):
    m = iso.rows() if isinstance(iso, IntegerIsometry) else [list(r) for r in iso]
    n = len(m)
    cp = tuple(int(c) for c in charpoly(m))
    factors, cofactor = split_cyclotomic(cp, n)
    traces = []
    power = identity(n)
    for _ in range(trace_terms):
        power = mat_mul(power, m)
        traces.append(trace(power))
    growth = []
    power = m
    for _ in range(6):
        growth.append(max(abs(x) for row in power for x in row))
        power = mat_mul(power, power)
    residual = tuple(int(c) for c in cofactor.coeffs)
    evidence = (cp, factors, residual, tuple(traces), tuple(growth))
    if cofactor.degree > 0:
        return OrderCertificate(False, None, *evidence)
    big = lcm(*(k for k, _ in factors)) if factors else 1
    if not is_identity(mat_pow(m, big)):
        # all eigenvalues are roots of unity but the matrix is not semisimple
        return OrderCertificate(False, None, *evidence)
    order = min(d for d in range(1, big + 1) if big % d == 0 and is_identity(mat_pow(m, d)))
    return OrderCertificate(True, order, *evidence)


def is_reciprocal(coeffs):
    """``x^n p(1/x) = +-p(x)``."""
    c = list(coeffs)
    rev = c[::-1]
    return rev == c or rev == [-x for x in c]


def printed_product_matches(alpha, beta):
    """Which composition of the two involutions reproduces the printed product, if any."""
    printed = [list(r) for r in ALPHA_BETA]
    if [list(r) for r in alpha.compose(beta).matrix] == printed:
        return "alpha*beta"
    if [list(r) for r in beta.compose(alpha).matrix] == printed:
        return "beta*alpha"
    return None


def all_transpositions(reg=None):
    reg = reg or standard_registry()
    return {f"({i}{j})": build_s4_action(transposition(i, j), reg) for i, j in combinations((1, 2, 3, 4), 2)}
