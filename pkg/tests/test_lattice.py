import json

import pytest
import sympy

from tetraquartic.errors import IdentityFailed, LatticeMismatch, OddSquare, UnknownName
from tetraquartic.lattice import (
    CURVE_NAMES,
    ClassRegistry,
    GramLattice,
    adjunction_genus,
    del_pezzo_lattice,
    determinant,
    elementary_divisors,
    even_set_test,
    intersect,
    intersection_table,
    m_lattice,
    rr_genus,
    signature,
    union_arithmetic_genus,
    verify_class_identities,
)


def test_m_invariants():
    lat = m_lattice()
    assert lat.is_even
    assert signature(lat) == (1, 10, 0)
    assert determinant(lat) == 128
    assert elementary_divisors(lat.gram) == [1] * 8 + [4, 4, 8]


def test_invariants_against_sympy():
    g = sympy.Matrix(m_lattice().gram)
    assert g.det() == 128
    eig = g.eigenvals()
    pos = sum(m for e, m in eig.items() if sympy.N(e) > 0)
    assert pos == 1


def test_signature_handles_zero_diagonal():
    assert signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature([[0, 0], [0, 0]]) == (0, 0, 2)


def test_gram_validation():
    with pytest.raises(ValueError):
        GramLattice([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        GramLattice([[1, 0]])


def test_registry_basics(registry):
    assert set(CURVE_NAMES) <= set(registry.names())
    with pytest.raises(UnknownName):
        registry["nope"]
    other = del_pezzo_lattice().basis_vector(0)
    with pytest.raises(LatticeMismatch):
        intersect(registry["A"], other)


def test_registry_json_round_trip(registry):
    doc = json.loads(json.dumps(registry.to_json()))
    back = ClassRegistry.from_json(doc)
    assert back["H"].coords == registry["H"].coords
    assert back.lattice == registry.lattice


def test_curves_are_minus_two(registry):
    for name in CURVE_NAMES:
        assert registry[name].square() == -2


def test_class_identities_hold(registry):
    checks = verify_class_identities(registry)
    assert len(checks) == 9 and all(c.holds for c in checks)


def test_class_identity_failure_raises(registry):
    broken = ClassRegistry(registry.lattice)
    for name, vec in registry.items():
        broken.register(name, vec)
    broken.register("A0", registry["A0"] + registry["E1"])
    with pytest.raises(IdentityFailed):
        verify_class_identities(broken)
    report = verify_class_identities(broken, raise_on_failure=False)
    assert [c.name for c in report if not c.holds] == ["A0=expansion"]


def test_squares_and_rows(registry):
    assert [registry[n].square() for n in ("A", "A0", "H", "H'", "C")] == [20, 28, 4, 8, 22]
    row = intersection_table(registry, ["A"] + list(CURVE_NAMES))[0][1:]
    assert row == [2] * 6 + [1] * 8
    assert [intersect(registry["A0"], registry[c]) for c in CURVE_NAMES] == [1] * 6 + [2] * 4 + [3] * 4
    assert [intersect(registry["H'"], registry[c]) for c in CURVE_NAMES] == [2, 2, 4, 4, 2, 2] + [0] * 8


def test_even_eight(registry):
    eight = [registry[n] for n in ("E1", "E2", "E3", "E4", "R1", "R2", "R3", "R4")]
    half = even_set_test(eight)
    total = eight[0]
    for c in eight[1:]:
        total = total + c
    assert half is not None and 2 * half == total
    assert even_set_test(eight[:7]) is None


def test_riemann_roch(registry):
    A, C = registry["A"], registry["C"]
    rr = rr_genus(A)
    assert (rr.genus, rr.h0, rr.ambient_dim) == (11, 12, 11)
    assert rr_genus(C).genus == 12
    assert intersect(A, C) == 22
    assert union_arithmetic_genus(A, C) == 44
    assert intersect(A + C, registry["L12"]) == 2
    assert intersect(A + C, registry["E1"]) == 3


def test_rr_rejects_odd_square():
    lat = GramLattice([[1]])
    with pytest.raises(OddSquare):
        rr_genus(lat.basis_vector(0))


def test_del_pezzo():
    dp = del_pezzo_lattice()
    h, e1, e2, e3 = (dp.basis_vector(k) for k in range(4))
    assert dp.canonical().square() == 6
    assert adjunction_genus(6 * h - 2 * (e1 + e2 + e3)) == 7
    assert adjunction_genus(h) == 0
    assert adjunction_genus(e1) == 0
