"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives on an ordered tuple of variable names (its *universe*) and
stores a map from exponent tuples to nonzero ``Fraction`` coefficients.
Binary operations on polynomials with different universes first extend both
to the union (left operand's variables first), so ``x + y`` just works.

Terms are ordered graded-lexicographically with respect to the universe; this
order drives printing and the leading term used by exact division.
"""

from fractions import Fraction
from math import inf
from types import MappingProxyType

_SCALARS = (int, Fraction)


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable in {self.variables}")
        n = len(self.variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not fit universe {self.variables}")
            if c:
                clean[exp] = c if isinstance(c, Fraction) else Fraction(c)
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def _raw(cls, variables, terms):
        """Build without validation; ``terms`` must already be clean."""
        p = cls.__new__(cls)
        p.variables = variables
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, variables=()):
        return cls(variables)

    @classmethod
    def constant(cls, c, variables=()):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name, variables=None):
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            variables = variables + (name,)
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exp: 1})

    @classmethod
    def monomial(cls, powers, coeff=1, variables=None):
        """``powers`` maps variable name to exponent."""
        variables = tuple(variables) if variables is not None else tuple(powers)
        missing = [v for v in powers if v not in variables]
        variables = variables + tuple(missing)
        exp = tuple(powers.get(v, 0) for v in variables)
        return cls(variables, {exp: coeff})

    # basic queries ------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self):
        if not self._terms:
            return -inf
        return max(sum(e) for e in self._terms)

    def degree_in(self, v):
        if not self._terms:
            return -inf
        if v not in self.variables:
            return 0
        i = self.variables.index(v)
        return max(e[i] for e in self._terms)

    def used_variables(self):
        n = len(self.variables)
        used = [False] * n
        for e in self._terms:
            for i in range(n):
                if e[i]:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def is_homogeneous(self):
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    def coefficient(self, powers):
        """Coefficient of a monomial given as ``{name: exponent}``."""
        if any(v not in self.variables and k for v, k in powers.items()):
            return Fraction(0)
        exp = tuple(powers.get(v, 0) for v in self.variables)
        return self._terms.get(exp, Fraction(0))

    # universes ----------------------------------------------------------

    def extend(self, variables):
        """Re-embed into a universe containing all of this polynomial's variables."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = []
        for v in self.variables:
            if v not in variables:
                raise ValueError(f"universe {variables} lacks {v!r}")
            pos.append(variables.index(v))
        n = len(variables)
        terms = {}
        for e, c in self._terms.items():
            ne = [0] * n
            for i, k in zip(pos, e):
                ne[i] = k
            terms[tuple(ne)] = c
        return MultiPoly._raw(variables, terms)

    def restrict(self, variables):
        """Drop unused variables so the universe becomes ``variables``."""
        variables = tuple(variables)
        for v in self.used_variables():
            if v not in variables:
                raise ValueError(f"{v!r} occurs in the polynomial")
        idx = [self.variables.index(v) if v in self.variables else None for v in variables]
        terms = {tuple(e[i] if i is not None else 0 for i in idx): c for e, c in self._terms.items()}
        return MultiPoly._raw(variables, terms)

    def _align(self, other):
        if isinstance(other, _SCALARS):
            return self, MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented, NotImplemented
        if other.variables == self.variables:
            return self, other
        union = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.extend(union), other.extend(union)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        terms = dict(a._terms)
        for e, c in b._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly._raw(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (MultiPoly,) + _SCALARS):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return MultiPoly._raw(self.variables, {})
            other = Fraction(other)
            return MultiPoly._raw(self.variables, {e: c * other for e, c in self._terms.items()})
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return MultiPoly._raw(a.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            inv = 1 / Fraction(other)
            return self * inv
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, divisor):
        """Quotient of an exact division; raises ValueError if it does not divide."""
        a, b = self._align(divisor)
        if a is NotImplemented:
            raise TypeError(f"cannot divide by {type(divisor).__name__}")
        if not b._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = b.leading_term()
        rem = dict(a._terms)
        quot = {}
        n = len(a.variables)
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            if any(e[i] < lead_e[i] for i in range(n)):
                raise ValueError("polynomial division is not exact")
            qe = tuple(e[i] - lead_e[i] for i in range(n))
            qc = c / lead_c
            quot[qe] = qc
            for be, bc in b._terms.items():
                te = tuple(qe[i] + be[i] for i in range(n))
                s = rem.get(te, 0) - qc * bc
                if s:
                    rem[te] = s
                else:
                    rem.pop(te, None)
        return MultiPoly._raw(a.variables, quot)

    def divides(self, other):
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    # calculus and substitution -----------------------------------------

    def diff(self, v):
        if v not in self.variables:
            return MultiPoly._raw(self.variables, {})
        i = self.variables.index(v)
        terms = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[ne] = c * e[i]
        return MultiPoly._raw(self.variables, terms)

    def substitute(self, bindings):
        """Replace variables by polynomials or scalars.

        The result's universe is the unbound variables (in order) followed by
        any new variables introduced by the bindings.
        """
        for name in bindings:
            if name not in self.variables:
                raise ValueError(f"{name!r} is not in the universe {self.variables}")
        keep = tuple(v for v in self.variables if v not in bindings)
        extra = []
        for val in bindings.values():
            if isinstance(val, MultiPoly):
                for v in val.variables:
                    if v not in keep and v not in extra:
                        extra.append(v)
        universe = keep + tuple(extra)
        bound = {}
        for name, val in bindings.items():
            if isinstance(val, MultiPoly):
                bound[name] = val.extend(universe)
            else:
                bound[name] = MultiPoly.constant(val, universe)
        keep_idx = [self.variables.index(v) for v in keep]
        bind_idx = [(self.variables.index(name), name) for name in bindings]
        powers = {}

        def power(name, k):
            key = (name, k)
            if key not in powers:
                powers[key] = bound[name] ** k
            return powers[key]

        n = len(universe)
        result = MultiPoly._raw(universe, {})
        groups = {}
        for e, c in self._terms.items():
            bexp = tuple(e[i] for i, _ in bind_idx)
            ke = tuple(e[i] for i in keep_idx) + (0,) * (n - len(keep))
            groups.setdefault(bexp, {})[ke] = c
        for bexp, kterms in groups.items():
            factor = MultiPoly.constant(1, universe)
            for (_, name), k in zip(bind_idx, bexp):
                if k:
                    factor = factor * power(name, k)
            result = result + MultiPoly._raw(universe, kterms) * factor
        return result

    def evaluate(self, point):
        """Evaluate at a full assignment ``{name: value}``; values may be any ring elements."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(self.variables, e):
                if k:
                    term = term * point[v] ** k
            total = total + term
        return total

    __call__ = evaluate

    def coeffs_in(self, v):
        """Split as a polynomial in ``v``: ``{power: coefficient polynomial}``."""
        if v not in self.variables:
            return {0: self} if self._terms else {}
        i = self.variables.index(v)
        parts = {}
        for e, c in self._terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: MultiPoly._raw(self.variables, t) for k, t in parts.items()}

    def homogeneous_part(self, d):
        return MultiPoly._raw(self.variables, {e: c for e, c in self._terms.items() if sum(e) == d})

    def min_degree(self):
        if not self._terms:
            return inf
        return min(sum(e) for e in self._terms)

    def homogenize(self, h, degree=None):
        """Homogenize with the new variable ``h`` (appended to the universe)."""
        if degree is None:
            degree = self.total_degree()
        universe = self.variables + (h,)
        return MultiPoly._raw(universe, {e + (degree - sum(e),): c for e, c in self._terms.items()})

    # comparison and printing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.constant_value() == other if self._terms else other == 0
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        return a._terms == b._terms

    def __hash__(self):
        if self._hash is None:
            used = self.used_variables()
            self._hash = hash((used, frozenset(self.restrict(used)._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def symbols(*names):
    """Return one variable polynomial per name, all sharing a single universe."""
    return tuple(MultiPoly.var(n, names) for n in names)


def linear_form(coeffs, variables):
    """``sum(c * v)`` over matching coefficient and variable lists."""
    variables = tuple(variables)
    terms = {}
    n = len(variables)
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
    return MultiPoly(variables, terms)
