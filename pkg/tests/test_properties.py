"""Randomised invariants, 100 examples each."""

from fractions import Fraction

from hypothesis import given, strategies as st

from tetraquartic.discform import build_disc_group, mod1, mod2
from tetraquartic.exactmath import BinaryForm, is_perfect_square
from tetraquartic.exactmath.matrix import bareiss_det, mat_mul
from tetraquartic.isometry import all_transpositions, build_mirror, load_printed_matrices
from tetraquartic.lattice import LatticeVector, smith_normal_form, standard_registry
from tetraquartic.quartic import QuarticCoefficients, build_quartic, cross_ratio_oracle, cross_ratios

REG = standard_registry()
LAT = REG.lattice
FQ = build_disc_group(LAT)
_pm = load_printed_matrices(REG)
GENERATORS = [_pm.alpha, _pm.beta, build_mirror(REG)] + list(all_transpositions(REG).values())

vectors = st.lists(st.integers(-9, 9), min_size=LAT.rank, max_size=LAT.rank).map(lambda c: LatticeVector(LAT, c))
words = st.lists(st.sampled_from(range(len(GENERATORS))), min_size=1, max_size=6)
elements = st.tuples(st.integers(0, 7), st.integers(0, 3), st.integers(0, 3))
nonzero = st.fractions(min_value=-30, max_value=30, max_denominator=7).filter(bool)


@given(words, vectors, vectors)
def test_isometry_words_preserve_pairing(word, x, y):
    g = GENERATORS[word[0]]
    for k in word[1:]:
        g = g.compose(GENERATORS[k])
    assert g(x).dot(g(y)) == x.dot(y)
    assert abs(g.det()) == 1


@given(vectors, vectors, vectors, st.integers(-5, 5), st.integers(-5, 5))
def test_pairing_is_symmetric_bilinear(x, y, z, a, b):
    assert x.dot(y) == y.dot(x)
    assert (a * x + b * y).dot(z) == a * x.dot(z) + b * y.dot(z)
    assert x.square() % 2 == 0


@given(st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_smith_form_reconstructs(m):
    snf = smith_normal_form(m)
    assert mat_mul(mat_mul(snf.U, m), snf.V) == snf.D
    assert abs(bareiss_det(snf.U)) == 1 and abs(bareiss_det(snf.V)) == 1
    d = snf.diagonal
    assert all(x >= 0 for x in d)
    for i in range(len(d) - 1):
        assert (d[i + 1] == 0) if d[i] == 0 else d[i + 1] % d[i] == 0
    off = [snf.D[i][j] for i in range(len(m)) for j in range(len(m[0])) if i != j]
    assert not any(off)


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=1, max_size=5),
       nonzero, st.integers(0, 3))
def test_perfect_square_round_trip(coeffs, scale, shift):
    g = BinaryForm(list(coeffs) + [0] * shift)
    if g.is_zero():
        return
    f = g * g * scale
    root = is_perfect_square(f)
    assert root is not None
    assert root.root * root.root * root.scalar == f
    # a square times a non-square linear factor pair never passes
    s, t = BinaryForm([1, 0]), BinaryForm([0, 1])
    assert is_perfect_square(f * s * (s - t)) is None


@given(elements, elements, st.integers(-9, 9))
def test_discriminant_form_mod_invariants(x, y, k):
    q, b = FQ.q, FQ.b
    assert 0 <= q(x) < 2 and 0 <= b(x, y) < 1
    assert mod2(q(FQ.add(x, y)) - q(x) - q(y)) == mod2(2 * b(x, y))
    assert q(FQ.scale(k, x)) == mod2(k * k * q(x))
    assert b(x, y) == b(y, x) == mod1(b(FQ.neg(x), FQ.neg(y)))
    assert q(FQ.neg(x)) == q(x)


@given(st.lists(nonzero, min_size=12, max_size=12))
def test_cross_ratio_formulas_match_points(values):
    c = QuarticCoefficients.from_values(values)
    if not all(den for _, den in c.cross_ratio_fractions().values()):
        return
    q = build_quartic(c)
    lam = cross_ratios(q)
    for edge, value in lam.items():
        assert cross_ratio_oracle(q, edge) == value


def test_mod_helpers():
    assert mod2(Fraction(-1, 2)) == Fraction(3, 2)
    assert mod1(Fraction(-3, 4)) == Fraction(1, 4)
