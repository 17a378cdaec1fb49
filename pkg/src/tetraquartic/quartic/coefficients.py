"""The twelve face coefficients (plus the constant ``delta``) of a tetrahedral quartic."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import combinations

from ..errors import InputParseError, NonRational
from ..exactmath.rational import format_rational, parse_rational

COEFFICIENT_NAMES = ("a0", "a1", "a2", "b0", "b1", "b3", "c0", "c2", "c3", "d1", "d2", "d3")

# nodes E1..E4 sit at the coordinate vertices; the quadratic part of F at E_k
# uses the three coefficients listed here
VERTEX_PRODUCTS = {
    1: ("a0", "b0", "c0"),
    2: ("a1", "b1", "d1"),
    3: ("a2", "c2", "d2"),
    4: ("b3", "c3", "d3"),
}

EDGE_KEYS = ("12", "13", "14", "23", "24", "34")


@dataclass(frozen=True)
class QuarticCoefficients:
    a0: Fraction
    a1: Fraction
    a2: Fraction
    b0: Fraction
    b1: Fraction
    b3: Fraction
    c0: Fraction
    c2: Fraction
    c3: Fraction
    d1: Fraction
    d2: Fraction
    d3: Fraction
    delta: Fraction = Fraction(1)

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, f.name, Fraction(v))

    @classmethod
    def from_values(cls, values, delta=1):
        return cls(*[Fraction(v) for v in values], delta=Fraction(delta))

    def values(self):
        return tuple(getattr(self, n) for n in COEFFICIENT_NAMES)

    def as_dict(self):
        d = {n: getattr(self, n) for n in COEFFICIENT_NAMES}
        d["delta"] = self.delta
        return d

    def to_json(self):
        return {k: format_rational(v) for k, v in self.as_dict().items()}

    def replace(self, **changes):
        d = self.as_dict()
        d.update({k: Fraction(v) for k, v in changes.items()})
        return QuarticCoefficients(**d)

    # closed-form cross-ratios on the six edges --------------------------------

    def cross_ratio_fractions(self):
        """Numerator and denominator of each edge cross-ratio, keyed ``"12"`` etc."""
        g = self.as_dict()
        return {
            "12": (g["a1"] * g["b0"], g["a0"] * g["b1"]),
            "13": (g["a2"] * g["c0"], g["a0"] * g["c2"]),
            "14": (g["b3"] * g["c0"], g["b0"] * g["c3"]),
            "23": (g["a2"] * g["d1"], g["a1"] * g["d2"]),
            "24": (g["b3"] * g["d1"], g["b1"] * g["d3"]),
            "34": (g["c3"] * g["d2"], g["c2"] * g["d3"]),
        }

    # genericity ------------------------------------------------------------

    def flags(self):
        vals = self.values()
        flags = {"all_nonzero": all(vals)}
        for k, names in VERTEX_PRODUCTS.items():
            p = Fraction(1)
            for n in names:
                p *= getattr(self, n)
            flags[f"node_E{k}"] = p != 0
        fr = self.cross_ratio_fractions()
        if all(den for _, den in fr.values()):
            lam = [num / den for num, den in fr.values()]
            flags["cross_ratios_distinct"] = all(x != y for x, y in combinations(lam, 2))
        else:
            flags["cross_ratios_distinct"] = False
        return flags

    @property
    def is_generic(self):
        return all(self.flags().values())


REFERENCE_SAMPLE = QuarticCoefficients.from_values([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37])


def coplanar_residual_sample(plane=(1, 2, 3, 5), scales=(1, 1, 1, 1), delta=1):
    """Coefficients whose four residual lines lie in the plane ``sum(plane[k] X_k) = 0``.

    Each face form is the restriction of that plane equation to its face, times a scale.
    """
    u0, u1, u2, u3 = (Fraction(x) for x in plane)
    sa, sb, sc, sd = (Fraction(x) for x in scales)
    return QuarticCoefficients(
        sa * u0, sa * u1, sa * u2,
        sb * u0, sb * u1, sb * u3,
        sc * u0, sc * u2, sc * u3,
        sd * u1, sd * u2, sd * u3,
        delta=Fraction(delta),
    )


COPLANAR_SAMPLE = coplanar_residual_sample()


def parse_input(text):
    """Read the JSON input format: the twelve coefficients as ``"p/q"`` strings, optional ``delta``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputParseError(f"invalid JSON: {exc.msg}", None, exc.lineno) from None
    if not isinstance(doc, dict):
        raise InputParseError("expected a JSON object of coefficients", None, None)
    unknown = sorted(set(doc) - set(COEFFICIENT_NAMES) - {"delta"})
    if unknown:
        raise InputParseError(f"unknown field {unknown[0]!r}", unknown[0], _line_of(text, unknown[0]))
    values = {}
    for name in COEFFICIENT_NAMES + ("delta",):
        if name not in doc:
            if name == "delta":
                values[name] = Fraction(1)
                continue
            raise InputParseError(f"missing field {name!r}", name, None)
        raw = doc[name]
        if isinstance(raw, bool) or not isinstance(raw, (str, int)):
            raise InputParseError(f"field {name!r} must be a string \"p/q\"", name, _line_of(text, name))
        try:
            values[name] = parse_rational(str(raw))
        except NonRational as exc:
            raise InputParseError(f"field {name!r}: {exc}", name, _line_of(text, name)) from None
    return QuarticCoefficients(**values)


def _line_of(text, key):
    needle = f'"{key}"'
    for k, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return k
    return None
