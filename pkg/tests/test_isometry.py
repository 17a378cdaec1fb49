import sympy
import pytest

from tetraquartic.discform import PRINTED_ACTIONS, induced_disc_auto
from tetraquartic.errors import NotIsometry
from tetraquartic.isometry import (
    ALPHA_BETA,
    IntegerIsometry,
    build_mirror,
    build_s4_action,
    cyclotomic_indices,
    cyclotomic_polynomial,
    decide_order,
    euler_phi,
    identity_isometry,
    is_reciprocal,
    load_involutions,
    printed_product_matches,
    split_cyclotomic,
    transposition,
    verify_alpha_images,
)


def test_printed_matrices_are_involutive_isometries(printed):
    a, b = printed.alpha, printed.beta
    assert printed.convention == "column"
    assert a.power(2).is_identity() and b.power(2).is_identity()
    assert a.det() == b.det() == -1


def test_alpha_images(printed, registry):
    report = verify_alpha_images(printed.alpha, registry)
    assert len(report) == 15 and all(c.holds for c in report)


def test_beta_is_conjugate(printed, registry):
    t = build_s4_action(transposition(3, 4), registry)
    assert t.compose(printed.alpha).compose(t.inverse()) == printed.beta


def test_printed_product(printed):
    assert printed_product_matches(printed.alpha, printed.beta) == "alpha*beta"
    assert [list(r) for r in printed.alpha.compose(printed.beta).matrix] == [list(r) for r in ALPHA_BETA]


def test_non_isometry_rejected(registry):
    m = [[int(i == j) for j in range(11)] for i in range(11)]
    m[0][1] = 1
    with pytest.raises(NotIsometry):
        IntegerIsometry(registry.lattice, m)


def test_product_order_certificate(printed):
    cert = decide_order(printed.alpha.compose(printed.beta))
    assert cert.verdict == "infinite"
    assert cert.cyclotomic_factors == ((1, 7), (2, 4))
    assert cert.trace_sequence[:4] == (3, 11, 3, 11)
    assert cert.entry_growth == (3, 7, 22, 76, 280, 1072)


def test_charpoly_against_sympy(printed):
    ab = printed.alpha.compose(printed.beta)
    x = sympy.Symbol("x")
    p = sympy.Matrix(ab.rows()).charpoly(x).as_expr()
    assert sympy.factor(p) == (x - 1) ** 7 * (x + 1) ** 4
    assert tuple(ab.charpoly()) == tuple(int(c) for c in reversed(sympy.Poly(p, x).all_coeffs()))
    assert is_reciprocal(ab.charpoly())


def test_finite_orders(printed, registry):
    assert decide_order(printed.alpha).verdict == "finite(2)"
    assert decide_order(identity_isometry(registry.lattice)).verdict == "finite(1)"
    c3 = build_s4_action((2, 3, 1, 4), registry)
    assert decide_order(c3).verdict == "finite(3)"


def test_cyclotomic_helpers():
    idx = cyclotomic_indices(11)
    assert len(idx) == 20 and max(idx) == 30
    assert all(euler_phi(n) <= 11 for n in idx)
    x = sympy.Symbol("x")
    for n in (1, 6, 12, 30):
        expected = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]
        assert [int(c) for c in cyclotomic_polynomial(n).coeffs] == expected
    factors, rest = split_cyclotomic((2, -3, 1))   # (x - 1)(x - 2)
    assert factors == ((1, 1),) and rest.degree == 1


def test_induced_actions(printed, registry, disc):
    assert induced_disc_auto(printed.alpha, disc).images == PRINTED_ACTIONS["i"].images
    mirror = build_mirror(registry)
    assert mirror.power(2).is_identity()
    assert induced_disc_auto(mirror, disc).images == PRINTED_ACTIONS["mu"].images
    for i, j in ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)):
        t = build_s4_action(transposition(i, j), registry)
        assert induced_disc_auto(t, disc).images == PRINTED_ACTIONS[f"({i}{j})"].images


def test_mirror_maps_residuals_to_nodes(registry):
    mirror = build_mirror(registry)
    for k in (1, 2, 3, 4):
        assert mirror(registry[f"R{k}"]) == registry[f"E{k}"]
    assert mirror(registry["H"]) == registry["Hv"]


def test_load_involutions_matches_printed(printed, registry):
    alpha, beta = load_involutions(registry)
    assert alpha == printed.alpha and beta == printed.beta
