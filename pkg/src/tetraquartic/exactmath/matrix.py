"""Small exact matrix kernels over lists of lists.

Entries are ints, ``Fraction``s, or any ring element supporting ``+ - *``;
routines that need exact division take it as a parameter.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def transpose(m):
    return [list(row) for row in zip(*m)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_pow(a, k):
    result = identity(len(a))
    base = [list(r) for r in a]
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def is_identity(m):
    return all(m[i][j] == (1 if i == j else 0) for i in range(len(m)) for j in range(len(m)))


def is_symmetric(m):
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def trace(m):
    return sum(m[i][i] for i in range(len(m)))


def _div_exact_int(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact integer division {a}/{b}")
    return q


def bareiss_det(m, exact_div=None, zero=0):
    """Determinant by fraction-free Bareiss elimination with row pivoting.

    ``exact_div(a, b)`` must return ``a / b`` when ``b`` divides ``a``; the
    default handles ints and ``Fraction``s.
    """
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    if exact_div is None:
        def exact_div(x, y):
            if isinstance(x, int) and isinstance(y, int):
                return _div_exact_int(x, y)
            return x / y
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else exact_div(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def rank(m):
    """Rank over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), (len(a[0]) if a else 0)
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def inverse(m):
    """Exact inverse over the rationals (Gauss-Jordan); raises ZeroDivisionError if singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def nullspace(m):
    """Basis of the right kernel over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -a[i][f]
        basis.append(v)
    return basis


def charpoly(m):
    """Characteristic polynomial ``det(x I - m)`` by Berkowitz's division-free method.

    Returns integer (or ring) coefficients from the constant term up to the
    leading 1.
    """
    n = len(m)
    if n == 0:
        return [1]
    # Berkowitz: build the Toeplitz products from the bottom-right corner outward.
    vect = [1, -m[n - 1][n - 1]]  # char poly of the 1x1 trailing block, highest first
    for k in range(n - 2, -1, -1):
        size = n - k - 1
        a_kk = m[k][k]
        row = [m[k][j] for j in range(k + 1, n)]
        col = [m[i][k] for i in range(k + 1, n)]
        sub = [r[k + 1:] for r in m[k + 1:]]
        # entries of the Toeplitz column: 1, -a_kk, -R C, -R A C, -R A^2 C, ...
        t = [1, -a_kk]
        v = col
        for _ in range(size):
            t.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(sub[i][j] * v[j] for j in range(size)) for i in range(size)]
        new = []
        for i in range(size + 2):
            new.append(sum(t[i - j] * vect[j] for j in range(len(vect)) if 0 <= i - j < len(t)))
        vect = new
    return list(reversed(vect))


def fraction_matrix(m):
    return [[Fraction(x) for x in row] for row in m]


def as_int_matrix(m):
    out = []
    for row in m:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError(f"non-integer entry {x}")
            r.append(x.numerator)
        out.append(r)
    return out

