from fractions import Fraction

import pytest

from tetraquartic.discform import (
    PRINTED_ACTIONS,
    DiscAutomorphism,
    build_disc_group,
    closure,
    enumerate_autos,
    generator_table,
    identity_auto,
    mod1,
    mod2,
    signed,
    verify_dual_lifts,
)
from tetraquartic.errors import DegenerateLattice
from tetraquartic.lattice import GramLattice


def test_group_shape(disc):
    assert disc.order == 128
    assert [disc.element_order(g) for g in disc.generators()] == [8, 4, 4]
    assert len(disc.elements()) == 128


def test_q_and_b_tables(disc):
    e, l23, l24 = disc.generators()
    assert disc.q(e) == Fraction(3, 8)
    assert disc.q(l23) == disc.q(l24) == Fraction(3, 2)
    assert signed(disc.q(l23), 2) == Fraction(-1, 2)
    assert disc.b(e, e) == Fraction(3, 8)
    assert disc.b(e, l23) == disc.b(e, l24) == Fraction(1, 2)
    assert disc.b(l23, l24) == Fraction(1, 4)


def test_generator_table_shows_both_forms(disc):
    rows = {name: (val, sgn) for name, val, sgn in generator_table(disc)}
    assert rows["q(lam23)"] == (Fraction(3, 2), Fraction(-1, 2))


def test_lifts_and_relations(disc):
    report = verify_dual_lifts(disc)
    assert len(report) == 3 + 8 + 3
    assert all(c.holds for c in report)


def test_reduce_rejects_non_dual_vectors(disc):
    with pytest.raises(ValueError):
        disc.reduce((Fraction(1, 3),) + (0,) * 10)


def test_q_of_lift_matches_table(disc):
    for x in disc.generators():
        assert disc.q_vector(disc.lift(x)) == disc.q(x)


def test_degenerate_lattice_rejected():
    with pytest.raises(DegenerateLattice):
        build_disc_group(GramLattice([[0, 0], [0, 0]]))


def test_mod_helpers():
    assert mod1(Fraction(5, 4)) == Fraction(1, 4)
    assert mod2(Fraction(-1, 2)) == Fraction(3, 2)
    assert signed(Fraction(7, 4), 2) == Fraction(-1, 4)


def test_printed_actions_are_automorphisms(disc):
    for name, a in PRINTED_ACTIONS.items():
        assert a.is_well_defined() and a.is_bijective(), name
        assert a.preserves(disc), name


def test_automorphism_group_equals_closure(disc):
    autos = enumerate_autos(disc)
    assert autos == closure(PRINTED_ACTIONS.values())
    assert len(autos) == 96


def test_s4_block_has_order_24():
    block = [a for n, a in PRINTED_ACTIONS.items() if n.startswith("(")]
    assert len(closure(block)) == 24


def test_composition_and_identity(disc):
    i = PRINTED_ACTIONS["i"]
    ident = identity_auto()
    assert (i @ ident).images == i.images
    x = (3, 1, 2)
    assert (i @ i)(x) == i(i(x))


def test_non_automorphism_detected(disc):
    swap = DiscAutomorphism(((0, 1, 0), (1, 0, 0), (0, 0, 1)), (8, 4, 4), "bad")
    assert not swap.is_well_defined() or not swap.preserves(disc)
