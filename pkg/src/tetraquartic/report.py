"""Claim records: every checked statement with its expected and computed exact value."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .errors import TetraQuarticError
from .exactmath.rational import format_rational

PASS, FAIL, UNVERIFIED = "pass", "fail", "unverified"


@lru_cache(maxsize=None)
def manifest():
    """Frozen claim ids and their locations, shipped with the package."""
    text = resources.files("tetraquartic").joinpath("data/claims.json").read_text(encoding="utf-8")
    return json.loads(text)


def render(value):
    """Canonical exact text for a value: rationals as p/q, never decimals."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return str(value)
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {render(v)}" for k, v in sorted(value.items())) + "}"
    return str(value)


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    location: str
    expected: object
    computed: object
    status: str
    note: str = ""

    def to_json(self):
        out = {"claim_id": self.claim_id, "location": self.location, "expected": render(self.expected),
               "computed": render(self.computed), "status": self.status}
        if self.note:
            out["note"] = self.note
        return out

    def to_text(self):
        line = f"{self.status.upper():<10} {self.claim_id}  [{self.location}]  expected={render(self.expected)}"
        if self.status != UNVERIFIED:
            line += f"  computed={render(self.computed)}"
        if self.note:
            line += f"  ({self.note})"
        return line


def claim(claim_id, expected, computed, note=""):
    loc = manifest()[claim_id]["location"]
    status = PASS if expected == computed else FAIL
    return ClaimRecord(claim_id, loc, expected, computed, status, note)


def unverified(claim_id, expected, note):
    return ClaimRecord(claim_id, manifest()[claim_id]["location"], expected, None, UNVERIFIED, note)


def failed(claim_id, expected, exc):
    return ClaimRecord(claim_id, manifest()[claim_id]["location"], expected,
                       f"{type(exc).__name__}: {exc}", FAIL)


# lattice --------------------------------------------------------------------------

def lattice_claims():
    from .lattice import (
        CURVE_NAMES, adjunction_genus, del_pezzo_lattice, determinant, elementary_divisors,
        even_set_test, intersect, m_lattice, rr_genus, signature, standard_registry,
        union_arithmetic_genus, verify_class_identities,
    )

    reg = standard_registry()
    lat = m_lattice()
    out = [
        claim("lattice.even", True, lat.is_even),
        claim("lattice.signature", (1, 10, 0), tuple(signature(lat))),
        claim("lattice.abs-determinant", 128, abs(determinant(lat))),
        claim("lattice.elementary-divisors", (1,) * 8 + (4, 4, 8), tuple(elementary_divisors(lat.gram))),
    ]
    checks = {c.name: c for c in verify_class_identities(reg, raise_on_failure=False)}
    for k in (1, 2, 3, 4):
        out.append(claim(f"classes.H-face{k}", True, checks[f"H=face{k}"].holds))
    out.append(claim("classes.A0-expansion", True, checks["A0=expansion"].holds))
    out.append(claim("classes.E4-plane-section", True, checks["E4=plane-section"].holds))
    out.append(claim("classes.E4-residual-swap", True, checks["E4=residual-swap"].holds))
    out.append(claim("classes.even-eight", True, checks["even-eight"].holds))
    eight = [reg[n] for n in ("E1", "E2", "E3", "E4", "R1", "R2", "R3", "R4")]
    half = even_set_test(eight)
    total = eight[0]
    for c in eight[1:]:
        total = total + c
    out.append(claim("classes.even-eight-half", True, half is not None and 2 * half == total))
    for name, sq in (("A", 20), ("A0", 28), ("H", 4), ("H'", 8), ("Hv", 4), ("C", 22)):
        out.append(claim(f"classes.square.{name}", sq, reg[name].square()))
    rows = {
        "A": [2] * 6 + [1] * 4 + [1] * 4,
        "A0": [1] * 6 + [2] * 4 + [3] * 4,
        "H'": [2, 2, 4, 4, 2, 2] + [0] * 8,
        "Hv": [1] * 6 + [1] * 4 + [0] * 4,
    }
    for name, row in rows.items():
        out.append(claim(f"classes.row.{name}", row, [intersect(reg[name], reg[c]) for c in CURVE_NAMES]))
    A, C = reg["A"], reg["C"]
    out += [
        claim("rr.genus-A", 11, rr_genus(A).genus),
        claim("rr.h0-A", 12, rr_genus(A).h0),
        claim("rr.genus-C", 12, rr_genus(C).genus),
        claim("rr.A-dot-C", 22, intersect(A, C)),
        claim("rr.union-genus", 44, union_arithmetic_genus(A, C)),
        claim("rr.A-dot-C-at-least-h0", True, intersect(A, C) >= rr_genus(A).h0),
        claim("rr.sum-dot-L12", 2, intersect(A + C, reg["L12"])),
        claim("rr.sum-dot-E1", 3, intersect(A + C, reg["E1"])),
    ]
    dp = del_pezzo_lattice()
    h, e1, e2, e3 = (dp.basis_vector(k) for k in range(4))
    out += [
        claim("delpezzo.K-square", 6, dp.canonical().square()),
        claim("delpezzo.genus-6h-2e", 7, adjunction_genus(6 * h - 2 * (e1 + e2 + e3))),
        claim("delpezzo.genus-h", 0, adjunction_genus(h)),
    ]
    return out


# discriminant form ----------------------------------------------------------------------

def discform_claims(jobs=1):
    from .discform import (
        PRINTED_ACTIONS, build_disc_group, closure, enumerate_autos, mod1, mod2, verify_dual_lifts,
    )
    from .lattice import m_lattice

    fq = build_disc_group(m_lattice())
    g = fq.generators()
    out = [
        claim("discform.order", 128, fq.order),
        claim("discform.generator-orders", (8, 4, 4), tuple(fq.element_order(x) for x in g)),
        claim("discform.q-eps1", mod2(Fraction(3, 8)), fq.q(g[0])),
        claim("discform.q-lam23", mod2(Fraction(-1, 2)), fq.q(g[1])),
        claim("discform.q-lam24", mod2(Fraction(-1, 2)), fq.q(g[2])),
        claim("discform.b-eps1-eps1", mod1(Fraction(3, 8)), fq.b(g[0], g[0])),
        claim("discform.b-lam23-lam23", mod1(Fraction(-1, 2)), fq.b(g[1], g[1])),
        claim("discform.b-lam24-lam24", mod1(Fraction(-1, 2)), fq.b(g[2], g[2])),
        claim("discform.b-eps1-lam23", mod1(Fraction(1, 2)), fq.b(g[0], g[1])),
        claim("discform.b-eps1-lam24", mod1(Fraction(1, 2)), fq.b(g[0], g[2])),
        claim("discform.b-lam23-lam24", mod1(Fraction(1, 4)), fq.b(g[1], g[2])),
    ]
    for c in verify_dual_lifts(fq, raise_on_failure=False):
        if "=" in c.name and not c.name.endswith("=0"):
            key = "discform.relation." + c.name.split("=")[0]
        elif c.name.endswith("=0"):
            key = "discform.order-kills." + c.name.split("*")[1][:-2]
        else:
            key = "discform.lift." + c.name.replace("*", "")
        out.append(claim(key, c.expected, c.computed))
    autos = enumerate_autos(fq, jobs=jobs)
    generated = closure(PRINTED_ACTIONS.values())
    out.append(claim("discform.aut-equals-closure", True, autos == generated))
    out.append(claim("discform.aut-order", len(generated), len(autos),
                     note="order not stated in the source; expected value is the closure order"))
    for name, a in sorted(PRINTED_ACTIONS.items()):
        out.append(claim(f"discform.action-preserves-q.{name}", True, a.is_bijective() and a.preserves(fq)))
    return out


# isometries ----------------------------------------------------------------------------

def isometry_claims():
    from .discform import PRINTED_ACTIONS, build_disc_group, induced_disc_auto
    from .isometry import (
        all_transpositions, build_mirror, build_s4_action, decide_order, is_reciprocal,
        load_printed_matrices, printed_product_matches, transposition, verify_alpha_images,
    )
    from .lattice import standard_registry

    reg = standard_registry()
    pm = load_printed_matrices(reg)
    a, b = pm.alpha, pm.beta
    out = [
        claim("isometry.printed-convention", "column", pm.convention),
        claim("isometry.alpha-involution", True, a.power(2).is_identity()),
        claim("isometry.beta-involution", True, b.power(2).is_identity()),
        claim("isometry.alpha-det", -1, a.det()),
        claim("isometry.beta-det", -1, b.det()),
    ]
    for c in verify_alpha_images(a, reg, raise_on_failure=False):
        out.append(claim(f"isometry.alpha-image.{c.name}", c.expected, c.computed))
    t34 = build_s4_action(transposition(3, 4), reg)
    out.append(claim("isometry.beta-is-conjugate", True, t34.compose(a).compose(t34.inverse()) == b))
    out.append(claim("isometry.printed-product", "alpha*beta", printed_product_matches(a, b)))
    ab = a.compose(b)
    cert = decide_order(ab)
    out.append(claim("isometry.order-alpha", "finite(2)", decide_order(a).verdict))
    out.append(claim("isometry.order-product", "infinite", cert.verdict,
                     note=f"charpoly {render(list(cert.charpoly))}, entry growth {render(list(cert.entry_growth))}"))
    out.append(claim("isometry.product-noncyclotomic-factor", True, cert.has_noncyclotomic_factor,
                     note=f"cyclotomic factors {render([list(f) for f in cert.cyclotomic_factors])}"))
    out.append(claim("isometry.product-charpoly-reciprocal", True, is_reciprocal(cert.charpoly)))
    fq = build_disc_group(reg.lattice)
    out.append(claim("isometry.induced-alpha", PRINTED_ACTIONS["i"].images, induced_disc_auto(a, fq).images))
    mirror = build_mirror(reg)
    out.append(claim("isometry.mirror-involution", True, mirror.power(2).is_identity()))
    out.append(claim("isometry.mirror-H", reg["Hv"].coords, mirror.apply(reg["H"]).coords))
    out.append(claim("isometry.induced-mirror", PRINTED_ACTIONS["mu"].images, induced_disc_auto(mirror, fq).images))
    for name, t in sorted(all_transpositions(reg).items()):
        out.append(claim(f"isometry.induced-transposition.{name}", PRINTED_ACTIONS[name].images,
                         induced_disc_auto(t, fq).images))
        out.append(claim(f"isometry.transposition-involution.{name}", True, t.power(2).is_identity()))
    return out


# geometry -------------------------------------------------------------------------------

def quartic_claims(coeffs=None, jobs=1, summary=None):
    """Geometry claims for one coefficient sample.

    Heavy eliminations only run on generic samples; otherwise they are recorded
    as failures carrying ``DegenerateCoefficient``.  ``summary``, if a dict, is
    filled with flags, cross-ratios, lines and fiber data for the JSON output.
    """
    from .errors import DegenerateCoefficient
    from .quartic import (
        EDGE_KEYS, PENCILS, PLANE, REFERENCE_SAMPLE, VERTICES, all_cross_ratio_oracles, all_fibrations,
        branch_sextic, build_quartic, classify_surface_point, conic_parametrization, cross_ratio_relation,
        cross_ratios, cusp_reports, edge_parametrization, edge_vanishes, enumerate_lines,
        line_parametrization, named_lines, singular_locus_count, symbolic_cross_ratio_relation,
        tangency_cubic_check, tritangency_check,
    )

    c = coeffs or REFERENCE_SAMPLE
    summary = summary if summary is not None else {}
    q = build_quartic(c)
    out = []
    flags = c.flags()
    summary["coefficients"] = {k: render(v) for k, v in c.as_dict().items()}
    summary["flags"] = {k: render(v) for k, v in flags.items()}
    for name, value in sorted(flags.items()):
        out.append(claim(f"quartic.flag.{name}", True, value))
    for key in EDGE_KEYS:
        out.append(claim(f"quartic.edge-on-surface.L{key}", True, edge_vanishes(q, int(key[0]), int(key[1]))))
    try:
        for ln in named_lines(q):
            if ln.name.startswith("R"):
                out.append(claim(f"quartic.residual-on-surface.{ln.name}", True, ln.lies_on(q.F)))
    except (TetraQuarticError, ValueError) as exc:
        for j in (1, 2, 3, 4):
            out.append(failed(f"quartic.residual-on-surface.R{j}", True, exc))
    for name, v in sorted(VERTICES.items()):
        try:
            kind = classify_surface_point(q, v).classification
        except TetraQuarticError as exc:
            out.append(failed(f"quartic.vertex-node.{name}", "node", exc))
        else:
            out.append(claim(f"quartic.vertex-node.{name}", "node", kind))

    generic = all(flags.values())
    not_generic = DegenerateCoefficient(
        "sample is not generic: " + ", ".join(k for k, v in sorted(flags.items()) if not v))

    def guarded(ids_expected, fn, needs_generic=True):
        try:
            if needs_generic and not generic:
                raise not_generic
            out.extend(fn())
        except TetraQuarticError as exc:
            for cid, exp in ids_expected:
                out.append(failed(cid, exp, exc))

    guarded([("quartic.singular-count", 4)],
            lambda: [claim("quartic.singular-count", 4, singular_locus_count(q).count)])

    def lines():
        e = enumerate_lines(q, jobs=jobs)
        summary["lines"] = [{"name": ln.name, "span": [[render(x) for x in ln.row1], [render(x) for x in ln.row2]]}
                            for ln in sorted(e.lines, key=lambda ln: ln.name)]
        return [
            claim("quartic.line-count", 10, e.count),
            claim("quartic.line-names", ["L12", "L13", "L14", "L23", "L24", "L34", "R1", "R2", "R3", "R4"],
                  e.names()),
            claim("quartic.lines-on-surface", True, all(ln.lies_on(q.F) for ln in e.lines)),
        ]

    guarded([("quartic.line-count", 10), ("quartic.line-names", "ten named lines"),
             ("quartic.lines-on-surface", True)], lines)

    def crossratios():
        lam = cross_ratios(q)
        summary["cross_ratios"] = {k: render(v) for k, v in lam.items()}
        orc = all_cross_ratio_oracles(q)
        recs = [claim(f"crossratio.oracle.{k}", lam[k], orc[k]) for k in EDGE_KEYS]
        recs.append(claim("crossratio.relation", 0, cross_ratio_relation(lam)))
        return recs

    guarded([(f"crossratio.oracle.{k}", "closed form") for k in EDGE_KEYS] + [("crossratio.relation", 0)],
            crossratios, needs_generic=False)
    out.append(claim("crossratio.relation-symbolic", True, symbolic_cross_ratio_relation().is_zero()))

    def sextic():
        bs = branch_sextic(q)
        recs = [claim("sextic.printed-formula", True, bs.matches_printed(c))]
        for k, rep in enumerate(cusp_reports(bs.G)):
            recs.append(claim(f"sextic.cusp.{PLANE[k]}", "cusp", rep.classification))
        line = line_parametrization(tuple(bs.L.coefficient({v: 1}) for v in PLANE), "L")
        recs.append(claim("sextic.tritangent-line", True, tritangency_check(bs.G, line, 3).ok))
        recs.append(claim("sextic.tritangent-conic", True, tritangency_check(bs.G, conic_parametrization(bs.P), 3).ok))
        for k in range(3):
            recs.append(claim(f"sextic.edge-tangent.X{k}", True, tritangency_check(bs.G, edge_parametrization(k), 1).ok))
        for chk in tangency_cubic_check(bs.G, bs.Qc, bs.L, bs.P):
            recs.append(claim(f"sextic.cubic.{_cubic_key(chk.name)}", True, chk.holds))
        return recs

    guarded([("sextic.printed-formula", True)], sextic)

    def fibrations():
        recs = []
        summary["fibrations"] = {}
        for rep in all_fibrations(q, jobs=jobs):
            fibers = [[kind, render(par)] for kind, par in rep.reducible_fibers]
            summary["fibrations"][rep.pencil] = {"reducible": fibers, "nodal": render(rep.nodal_fiber_count),
                                                 "euler_sum": render(rep.euler_sum)}
            if rep.pencil.startswith("L"):
                recs.append(claim(f"fibration.{rep.pencil}.reducible", ["I4", "I4"], rep.reducible_types()))
                recs.append(claim(f"fibration.{rep.pencil}.nodal", 16, rep.nodal_fiber_count))
            else:
                recs.append(claim(f"fibration.{rep.pencil}.reducible", ["I6"], rep.reducible_types(),
                                  note=f"fibers {render(fibers)}"))
                recs.append(claim(f"fibration.{rep.pencil}.nodal", 18, rep.nodal_fiber_count))
            recs.append(claim(f"fibration.{rep.pencil}.euler", 24, rep.euler_sum))
        return recs

    guarded([(f"fibration.{p}.euler", 24) for p in PENCILS], fibrations)
    out.append(unverified("fibration.six-nodal-model", "remaining singular fibers irreducible",
                          "needs the six-nodal projective model, which is not constructed"))
    return out


def _cubic_key(name):
    """``tangency points on X0=0`` -> ``points.X0``; ``cusp (1, 0, 0)`` -> ``cusp.100``."""
    if name.startswith("cusp"):
        return "cusp." + "".join(ch for ch in name if ch.isdigit())
    return "points." + name.rsplit(" ", 1)[1].replace("=0", "")


SECTIONS = ("lattice", "discform", "isometry", "quartic")


def run_report(subcommand="report", coeffs=None, jobs=1, summary=None):
    """Claim records for one subcommand (``report`` runs every section), sorted by id."""
    sections = SECTIONS if subcommand == "report" else (subcommand,)
    records = []
    for s in sections:
        if s == "lattice":
            records += lattice_claims()
        elif s == "discform":
            records += discform_claims(jobs)
        elif s == "isometry":
            records += isometry_claims()
        elif s == "quartic":
            records += quartic_claims(coeffs, jobs, summary)
        else:
            raise ValueError(f"unknown section {s!r}")
    return sorted(records, key=lambda r: r.claim_id)


def exit_status(records):
    return 0 if all(r.status != FAIL for r in records) else 1


def to_json(records, extra=None):
    doc = {"claims": [r.to_json() for r in records],
           "summary": {"pass": str(sum(r.status == PASS for r in records)),
                       "fail": str(sum(r.status == FAIL for r in records)),
                       "unverified": str(sum(r.status == UNVERIFIED for r in records))}}
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True)


def to_text(records):
    lines = [r.to_text() for r in records]
    n_pass = sum(r.status == PASS for r in records)
    n_fail = sum(r.status == FAIL for r in records)
    n_unv = sum(r.status == UNVERIFIED for r in records)
    lines.append(f"{n_pass} passed, {n_fail} failed, {n_unv} unverified")
    return "\n".join(lines)
