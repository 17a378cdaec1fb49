import json
from fractions import Fraction

import pytest
import sympy

from tetraquartic.errors import DegenerateCoefficient, InputParseError, NotANode, PointNotOnCurve, PointNotOnSurface
from tetraquartic.exactmath import MultiPoly, UniPoly, rational_roots, symbols
from tetraquartic.quartic import (
    COPLANAR_SAMPLE,
    EDGE_KEYS,
    PLANE,
    REFERENCE_SAMPLE,
    VERTICES,
    QuarticCoefficients,
    all_cross_ratio_oracles,
    branch_sextic,
    build_quartic,
    classify_plane_point,
    classify_surface_point,
    conic_parametrization,
    cross_ratio_relation,
    cross_ratios,
    cusp_reports,
    edge_parametrization,
    edge_vanishes,
    fibration_fibers,
    line_parametrization,
    named_lines,
    parse_input,
    printed_branch_sextic,
    singular_locus_count,
    symbolic_cross_ratio_relation,
    tangency_cubic_check,
    ternary_cubic_discriminant,
    tritangency_check,
)


def as_sympy(p):
    syms = sympy.symbols(p.variables)
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, exp):
            term *= s ** e
        expr += term
    return sympy.expand(expr), syms


# input ----------------------------------------------------------------------------------

def reference_json(**changes):
    doc = REFERENCE_SAMPLE.to_json()
    doc.pop("delta", None)
    doc.update(changes)
    return json.dumps(doc, indent=1)


def test_parse_reference_json():
    assert parse_input(reference_json()) == REFERENCE_SAMPLE
    assert parse_input(reference_json(a0="3/7")).a0 == Fraction(3, 7)


def test_parse_errors_name_the_field():
    doc = json.loads(reference_json())
    del doc["d3"]
    with pytest.raises(InputParseError) as err:
        parse_input(json.dumps(doc))
    assert err.value.field == "d3"
    with pytest.raises(InputParseError) as err:
        parse_input(reference_json(b1="0.5"))
    assert err.value.field == "b1" and err.value.line is not None
    with pytest.raises(InputParseError) as err:
        parse_input(reference_json(zz="1"))
    assert err.value.field == "zz"
    with pytest.raises(InputParseError):
        parse_input("{not json")


def test_zero_coefficient_parses_but_is_flagged():
    c = parse_input(reference_json(a0="0"))
    assert c.a0 == 0 and not c.is_generic
    assert not c.flags()["node_E1"]


# surface -----------------------------------------------------------------------------

def test_reference_flags():
    assert REFERENCE_SAMPLE.is_generic
    assert set(REFERENCE_SAMPLE.flags()) == {"all_nonzero", "node_E1", "node_E2", "node_E3", "node_E4",
                                            "cross_ratios_distinct"}


def test_quartic_has_thirteen_monomials(reference):
    assert len(reference.F) == 13
    assert reference.F.is_homogeneous() and reference.F.total_degree() == 4


def test_edges_and_residual_lines_on_surface(reference):
    for key in EDGE_KEYS:
        assert edge_vanishes(reference, int(key[0]), int(key[1]))
    lines = named_lines(reference)
    assert len(lines) == 10 and all(ln.lies_on(reference.F) for ln in lines)


def test_vertices_are_nodes(reference):
    for v in VERTICES.values():
        rep = classify_surface_point(reference, v)
        assert rep.classification == "node" and rep.tangent_cone_rank == 3


def test_smooth_point_and_off_surface(reference):
    p = (1, 1, 0, 0)   # on the edge L12
    assert classify_surface_point(reference, p).classification == "smooth"
    with pytest.raises(PointNotOnSurface):
        classify_surface_point(reference, (1, 1, 1, 1))


def test_singular_locus_reference(reference):
    locus = singular_locus_count(reference)
    assert locus.count == 4 and locus.all_rational
    assert sorted(locus.points) == sorted(tuple(Fraction(x) for x in v) for v in VERTICES.values())


def test_singular_locus_coplanar_sample():
    q = build_quartic(COPLANAR_SAMPLE)
    assert not COPLANAR_SAMPLE.flags()["cross_ratios_distinct"]
    assert singular_locus_count(q).count == 10


def test_lines_reference(reference_lines):
    assert reference_lines.count == 10 and reference_lines.all_rational
    assert reference_lines.names() == ["L12", "L13", "L14", "L23", "L24", "L34", "R1", "R2", "R3", "R4"]
    assert sum(n for _, n in reference_lines.per_chart) == 10


# cross-ratios -----------------------------------------------------------------------------

def test_cross_ratios_match_oracle(reference):
    lam = cross_ratios(reference)
    assert lam == all_cross_ratio_oracles(reference)
    assert lam["12"] == Fraction(3 * 7, 2 * 11)
    assert cross_ratio_relation(lam) == 0


def test_symbolic_relation_is_zero():
    assert symbolic_cross_ratio_relation().is_zero()


def test_zero_denominator_raises():
    q = build_quartic(REFERENCE_SAMPLE.replace(a0=0))
    with pytest.raises(DegenerateCoefficient):
        cross_ratios(q)


# branch sextic -------------------------------------------------------------------------------

def test_branch_sextic_matches_printed_and_sympy(reference):
    bs = branch_sextic(reference)
    assert bs.matches_printed(REFERENCE_SAMPLE)
    F, syms = as_sympy(reference.F)
    G, _ = as_sympy(bs.G.extend(reference.F.variables))
    assert sympy.expand(sympy.discriminant(F, syms[3]) - G) == 0


def test_branch_sextic_on_other_coefficients():
    c = REFERENCE_SAMPLE.replace(b3=Fraction(-5, 3), d1=Fraction(7, 2), delta=Fraction(2))
    assert branch_sextic(build_quartic(c)).G == printed_branch_sextic(c)


def test_branch_sextic_requires_node():
    q = build_quartic(REFERENCE_SAMPLE.replace(b3=0, c3=0, d3=0))
    with pytest.raises(NotANode):
        branch_sextic(q)


def test_cusps(reference):
    G = branch_sextic(reference).G
    assert [r.classification for r in cusp_reports(G)] == ["cusp"] * 3


def test_plane_point_classification():
    x, y, z = symbols(*PLANE)
    assert classify_plane_point(y * y * z - x * x * (x + z), (0, 0, 1)).classification == "node"
    assert classify_plane_point(y * y * z - x ** 3, (0, 0, 1)).classification == "cusp"
    assert classify_plane_point(y * y * z - x ** 3, (0, 1, 0)).classification == "smooth"
    assert classify_plane_point(x ** 4 + y ** 4, (0, 0, 1)).classification == "worse"
    with pytest.raises(PointNotOnCurve):
        classify_plane_point(y * y * z - x ** 3, (1, 2, 1))


def test_tritangencies(reference):
    bs = branch_sextic(reference)
    L = line_parametrization(tuple(bs.L.coefficient({v: 1}) for v in PLANE), "L")
    rep = tritangency_check(bs.G, L, 3)
    assert rep.ok and rep.square and rep.points_outside_cusps == 3
    assert tritangency_check(bs.G, conic_parametrization(bs.P), 3).ok
    for k in range(3):
        rep = tritangency_check(bs.G, edge_parametrization(k), 1)
        assert rep.ok and rep.points_outside_cusps == 1


def test_generic_line_is_not_tangent(reference):
    bs = branch_sextic(reference)
    rep = tritangency_check(bs.G, line_parametrization((1, 1, 1)), 3)
    assert not rep.ok


def test_tangency_cubic(reference):
    bs = branch_sextic(reference)
    checks = tangency_cubic_check(bs.G, bs.Qc, bs.L, bs.P)
    assert len(checks) == 8 and all(c.holds for c in checks)


# fibrations -----------------------------------------------------------------------------------

def test_hesse_pencil_discriminant():
    x, y, z = symbols("x", "y", "z")
    t = MultiPoly.var("t")
    cubic = x ** 3 + y ** 3 + z ** 3 - 3 * t * x * y * z
    delta = ternary_cubic_discriminant(cubic, ("x", "y", "z"))
    assert delta.degree == 9
    # singular members at t^3 = 1, each a triangle of lines
    assert rational_roots(delta) == [1]
    assert divmod(delta, UniPoly([-1, 0, 0, 1], "t") ** 3)[1].is_zero()


def test_nonsingular_cubic_has_nonzero_discriminant():
    x, y, z = symbols("x", "y", "z")
    delta = ternary_cubic_discriminant(x ** 3 + y ** 3 + z ** 3, ("x", "y", "z"))
    assert delta.degree == 0 and not delta.is_zero()
    delta = ternary_cubic_discriminant(x ** 3 + y ** 3, ("x", "y", "z"))
    assert delta.is_zero()


def test_edge_pencil(reference_fibrations):
    rep = reference_fibrations["L12"]
    assert rep.reducible_types() == ["I4", "I4"]
    assert rep.nodal_fiber_count == 16 and rep.irrational_part_squarefree
    assert rep.euler_sum == 24


def test_residual_pencil_structure(reference_fibrations):
    rep = reference_fibrations["R1"]
    assert sorted(rep.reducible_fibers, key=str) == sorted([("I2", Fraction(0)), ("I6", "oo")], key=str)
    assert rep.nodal_fiber_count == 16
    assert rep.euler_sum == 24


def test_all_pencils_have_euler_sum_24(reference_fibrations):
    assert len(reference_fibrations) == 10
    assert {rep.euler_sum for rep in reference_fibrations.values()} == {24}


def test_unknown_pencil(reference):
    with pytest.raises(ValueError):
        fibration_fibers(reference, "Z9")


def test_coefficients_helpers():
    c = QuarticCoefficients.from_values(range(1, 13))
    assert c.delta == 1
    assert c.replace(delta=2).delta == 2
    assert QuarticCoefficients(**{k: Fraction(v) for k, v in c.as_dict().items()}) == c
