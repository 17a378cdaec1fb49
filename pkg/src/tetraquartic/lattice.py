"""Integral symmetric bilinear forms and the named divisor classes living on them.

The rank-11 lattice ``M`` is spanned by the six edge lines, the four
exceptional curves over the nodes and one residual line:
``l12, l13, l14, l23, l24, l34, e1, e2, e3, e4, r1`` in that order.  Every other
class (the remaining residual lines, the hyperplane class and friends) is an
integer combination registered in a ``ClassRegistry``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    IdentityFailed,
    LatticeMismatch,
    NoCanonicalClass,
    OddSquare,
    UnknownName,
)
from .exactmath.matrix import bareiss_det, identity, is_symmetric


class GramLattice:
    """A free Z-module with a symmetric integer Gram matrix."""

    def __init__(self, gram, canonical_class=None, basis_names=None, name="lattice"):
        gram = [[int(x) for x in row] for row in gram]
        n = len(gram)
        if n == 0 or any(len(row) != n for row in gram):
            raise ValueError("Gram matrix must be square and nonempty")
        if not is_symmetric(gram):
            raise ValueError("Gram matrix must be symmetric")
        self.gram = tuple(tuple(row) for row in gram)
        self.rank = n
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"b{i}" for i in range(n))
        if len(self.basis_names) != n:
            raise ValueError("one basis name per basis vector")
        if canonical_class is not None:
            canonical_class = tuple(int(x) for x in canonical_class)
            if len(canonical_class) != n:
                raise ValueError("canonical class has the wrong length")
        self.canonical_class = canonical_class

    @property
    def is_even(self):
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def pair(self, u, v):
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(self.rank) if u[i] for j in range(self.rank) if v[j])

    def vector(self, coords):
        return LatticeVector(self, coords)

    def basis_vector(self, i):
        return LatticeVector(self, [1 if j == i else 0 for j in range(self.rank)])

    def canonical(self):
        if self.canonical_class is None:
            raise NoCanonicalClass(f"{self.name} has no canonical class")
        return LatticeVector(self, self.canonical_class)

    def __eq__(self, other):
        return isinstance(other, GramLattice) and self.gram == other.gram and self.canonical_class == other.canonical_class

    def __hash__(self):
        return hash((self.gram, self.canonical_class))

    def __repr__(self):
        return f"GramLattice({self.name}, rank={self.rank})"

    def to_json(self):
        return {"name": self.name, "basis": list(self.basis_names), "gram": [list(r) for r in self.gram],
                "canonical_class": list(self.canonical_class) if self.canonical_class else None}

    @classmethod
    def from_json(cls, doc):
        return cls(doc["gram"], doc.get("canonical_class"), doc.get("basis"), doc.get("name", "lattice"))


class LatticeVector:
    __slots__ = ("lattice", "coords")

    def __init__(self, lattice, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != lattice.rank:
            raise ValueError(f"expected {lattice.rank} coordinates, got {len(coords)}")
        self.lattice = lattice
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, LatticeVector):
            raise TypeError("expected a LatticeVector")
        if other.lattice is not self.lattice and other.lattice != self.lattice:
            raise LatticeMismatch("vectors live in different lattices")

    def __add__(self, other):
        self._check(other)
        return LatticeVector(self.lattice, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return LatticeVector(self.lattice, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return LatticeVector(self.lattice, [-a for a in self.coords])

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return LatticeVector(self.lattice, [k * a for a in self.coords])

    __rmul__ = __mul__

    def dot(self, other):
        return intersect(self, other)

    def square(self):
        return intersect(self, self)

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        return isinstance(other, LatticeVector) and self.lattice == other.lattice and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"LatticeVector({self})"

    def __str__(self):
        parts = []
        for name, c in zip(self.lattice.basis_names, self.coords):
            if c == 0:
                continue
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def intersect(a, b):
    """``a^T G b``."""
    if a.lattice is not b.lattice and a.lattice != b.lattice:
        raise LatticeMismatch("vectors live in different lattices")
    return a.lattice.pair(a.coords, b.coords)


# invariants -----------------------------------------------------------------

def signature(lat):
    """``(n_plus, n_minus, n_zero)`` by exact symmetric elimination.

    A nonzero diagonal entry is used as pivot when one exists; otherwise a
    nonzero off-diagonal entry ``a_ij`` is promoted by the congruence
    ``e_i -> e_i + e_j`` which puts ``2 a_ij`` on the diagonal.
    """
    gram = lat.gram if isinstance(lat, GramLattice) else lat
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    active = list(range(n))
    plus = minus = 0
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            plus += 1
        else:
            minus += 1
        active.remove(piv)
        for i in active:
            if a[i][piv]:
                f = a[i][piv] / d
                for k in range(n):
                    a[i][k] -= f * a[piv][k]
                for k in range(n):
                    a[k][i] -= f * a[k][piv]
    return plus, minus, n - plus - minus


def determinant(lat):
    gram = lat.gram if isinstance(lat, GramLattice) else lat
    return bareiss_det([list(r) for r in gram])


@dataclass(frozen=True)
class SmithForm:
    D: list
    U: list
    V: list

    @property
    def diagonal(self):
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def smith_normal_form(m):
    """``U m V = D`` with ``U, V`` unimodular and ``d1 | d2 | ...`` nonnegative.

    Pivots are chosen as the entry of smallest absolute value in the
    remaining block.
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for r in a:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if not done:
                # a smaller remainder appeared in row/column t: make it the pivot
                cand = [(abs(a[i][t]), i, "r") for i in range(t + 1, rows) if a[i][t]]
                cand += [(abs(a[t][j]), j, "c") for j in range(t + 1, cols) if a[t][j]]
                _, k, kind = min(cand)
                if kind == "r":
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            # divisibility of the remaining block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SmithForm(a, U, V)


def elementary_divisors(m):
    sf = smith_normal_form(m)
    return [d for d in sf.diagonal if d]


# the lattice M and its classes ---------------------------------------------

M_BASIS = ("L12", "L13", "L14", "L23", "L24", "L34", "E1", "E2", "E3", "E4", "R1")
EDGES = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def _edge_name(i, j):
    i, j = min(i, j), max(i, j)
    return f"L{i}{j}"


def m_gram():
    """Incidence matrix of the eleven basis curves (self-intersection -2)."""
    g = [[0] * 11 for _ in range(11)]
    for k in range(11):
        g[k][k] = -2
    idx = {n: k for k, n in enumerate(M_BASIS)}
    for (i, j) in EDGES:
        for node in (i, j):
            a, b = idx[_edge_name(i, j)], idx[f"E{node}"]
            g[a][b] = g[b][a] = 1
        # R1 lies in the face opposite node 1 and meets the three edges there
        if 1 not in (i, j):
            a, b = idx[_edge_name(i, j)], idx["R1"]
            g[a][b] = g[b][a] = 1
    return g


def m_lattice():
    return GramLattice(m_gram(), basis_names=M_BASIS, name="M")


class ClassRegistry:
    """Named classes on a lattice; derived classes are integer combinations."""

    def __init__(self, lattice):
        self.lattice = lattice
        self._names = {}
        for k, n in enumerate(lattice.basis_names):
            self._names[n] = lattice.basis_vector(k)

    def register(self, name, vector):
        if not isinstance(vector, LatticeVector):
            vector = self.combine(vector)
        if vector.lattice != self.lattice:
            raise LatticeMismatch(f"{name} lives in another lattice")
        self._names[name] = vector
        return vector

    def combine(self, terms):
        """``{name: coefficient}`` to a vector."""
        v = LatticeVector(self.lattice, [0] * self.lattice.rank)
        for name, c in terms.items():
            v = v + c * self[name]
        return v

    def __getitem__(self, name):
        try:
            return self._names[name]
        except KeyError:
            raise UnknownName(name) from None

    def __contains__(self, name):
        return name in self._names

    def names(self):
        return list(self._names)

    def items(self):
        return list(self._names.items())

    def to_json(self):
        return {"lattice": self.lattice.to_json(),
                "classes": {n: list(v.coords) for n, v in self._names.items()}}

    @classmethod
    def from_json(cls, doc):
        lat = GramLattice.from_json(doc["lattice"])
        reg = cls(lat)
        for n, coords in doc["classes"].items():
            reg._names[n] = LatticeVector(lat, coords)
        return reg

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _sum(reg, names):
    return reg.combine({n: 1 for n in names})


EDGE_NAMES = tuple(_edge_name(i, j) for i, j in EDGES)
NODE_NAMES = ("E1", "E2", "E3", "E4")
RESIDUAL_NAMES = ("R1", "R2", "R3", "R4")
CURVE_NAMES = EDGE_NAMES + NODE_NAMES + RESIDUAL_NAMES


def _face_edges(k):
    """Edges in the plane opposite node ``k``."""
    return {(a, b) for a, b in EDGES if k not in (a, b)}


def _residual_from_r1(reg, j):
    """``R_j = R1 + E_j - E1 + (edges of face 1 not in face j) - (edges of face j not in face 1)``."""
    terms = {"R1": 1, f"E{j}": 1, "E1": -1}
    for a, b in _face_edges(1) - _face_edges(j):
        terms[_edge_name(a, b)] = 1
    for a, b in _face_edges(j) - _face_edges(1):
        terms[_edge_name(a, b)] = -1
    return reg.combine(terms)


def standard_registry():
    """Registry on ``M`` with every named class used in the reports."""
    reg = ClassRegistry(m_lattice())
    for j in (2, 3, 4):
        reg.register(f"R{j}", _residual_from_r1(reg, j))
    # hyperplane class through the face opposite node 2: R2 plus the rest of that plane section
    reg.register("H", _sum(reg, ["R2", "E1", "E3", "E4", "L13", "L14", "L34"]))
    reg.register("A", _sum(reg, CURVE_NAMES))
    sum_e = _sum(reg, NODE_NAMES)
    sum_l = _sum(reg, EDGE_NAMES)
    reg.register("A0", 3 * reg["H"] - sum_e)
    reg.register("H'", reg["A"] - reg["L14"] - reg["L23"])
    reg.register("C", reg["A"] + reg["L12"])
    reg.register("Hv", 3 * reg["H"] - 2 * sum_e - sum_l)
    return reg


def hyperplane_face_expression(reg, k):
    """Plane section ``X_k-face``: the three edges and three nodes of face ``k`` plus ``R_k``."""
    nodes = [i for i in (1, 2, 3, 4) if i != k]
    edges = [_edge_name(a, b) for a, b in combinations(nodes, 2)]
    return _sum(reg, edges + [f"E{i}" for i in nodes] + [f"R{k}"])


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: str
    rhs: str
    residual: tuple

    @property
    def holds(self):
        return not any(self.residual)


def class_identities(reg):
    """The class identities that the registry is expected to satisfy."""
    c = reg.combine
    H = reg["H"]
    out = []
    for k in (1, 2, 3, 4):
        out.append((f"H=face{k}", "H", hyperplane_face_expression(reg, k)))
    out.append(("A0=expansion", reg["A0"], c({
        "E4": 2, "E1": 1, "E2": 1, "E3": 1, "R1": 1, "R2": 1, "R3": 1,
        "L14": 2, "L24": 2, "L34": 2, "L12": 1, "L23": 1, "L13": 1})))
    eight = c({"E1": 1, "E2": 1, "E3": 1, "E4": 1, "R1": 1, "R2": 1, "R3": 1, "R4": 1})
    half = c({"L23": 1, "L24": 1, "L34": 1, "L12": -1, "L13": -1, "L14": -1,
              "E1": -1, "E2": 1, "E3": 1, "E4": 1, "R1": 2})
    out.append(("even-eight", eight, 2 * half))
    out.append(("E4=plane-section", reg["E4"], H - c({"E1": 1, "E2": 1, "R3": 1, "L14": 1, "L24": 1, "L12": 1})))
    out.append(("E4=residual-swap", reg["E4"], c({"E3": 1, "R4": 1, "R3": -1, "L13": 1, "L23": 1, "L14": -1, "L24": -1})))
    out.append(("A=H+(A-H)", reg["A"], H + (reg["A"] - H)))
    return out


def verify_class_identities(reg, raise_on_failure=True):
    report = []
    for name, lhs, rhs in class_identities(reg):
        lhs = reg[lhs] if isinstance(lhs, str) else lhs
        res = lhs - rhs
        report.append(IdentityCheck(name, str(lhs), str(rhs), res.coords))
        if raise_on_failure and not res.is_zero():
            raise IdentityFailed(name, res.coords)
    return report


def intersection_table(reg, names):
    vecs = [reg[n] for n in names]
    return [[intersect(a, b) for b in vecs] for a in vecs]


@dataclass(frozen=True)
class RiemannRoch:
    square: int
    genus: int
    h0: int
    ambient_dim: int


def rr_genus(d):
    """Curve genus and section count of a class on a K3 surface (arithmetic only)."""
    sq = d.square()
    if sq % 2:
        raise OddSquare(f"class has odd square {sq}")
    if sq < -2:
        raise ValueError(f"class square {sq} < -2")
    genus = 1 + sq // 2
    h0 = 2 + sq // 2
    return RiemannRoch(sq, genus, h0, h0 - 1)


def union_arithmetic_genus(a, b):
    """Arithmetic genus of a nodal union of curves in the classes ``a`` and ``b``: ``g(a) + g(b) + a.b - 1``."""
    return rr_genus(a).genus + rr_genus(b).genus + intersect(a, b) - 1


def adjunction_genus(d):
    """``1 + (d.d + d.K) / 2``."""
    k = d.lattice.canonical()
    num = d.square() + intersect(d, k)
    if num % 2:
        raise OddSquare(f"d^2 + d.K = {num} is odd")
    return 1 + num // 2


def del_pezzo_lattice():
    """Blow-up of the plane at three points: ``h, e1, e2, e3`` with ``K = -3h + e1 + e2 + e3``."""
    return GramLattice([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
                       canonical_class=(-3, 1, 1, 1), basis_names=("h", "e1", "e2", "e3"),
                       name="dP6")


def even_set_test(classes):
    """Return ``x`` with ``2x`` equal to the sum of ``classes``, or None."""
    classes = list(classes)
    if not classes:
        return None
    lat = classes[0].lattice
    total = LatticeVector(lat, [0] * lat.rank)
    for c in classes:
        total = total + c
    # coordinates are taken in a Z-basis, so divisibility is coordinatewise
    if any(x % 2 for x in total.coords):
        return None
    return LatticeVector(lat, [x // 2 for x in total.coords])
