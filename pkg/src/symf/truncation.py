"""Polynomials in finitely many variables and the maps relating them to symmetric functions.

``expand(f, N)`` sets every variable past ``x_N`` to zero; ``collect`` goes
back from a symmetric polynomial to the monomial basis. Expansion of each
basis is by direct enumeration (orbits, subsets, multisets, powers,
semistandard tableaux) and does not use :mod:`symf.bases`.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from . import kernels
from .linalg import independent_columns
from .config import check_degree
from .errors import (BadArity, DegreeExceedsVariables, NonIntegralInput,
                     NotSymmetric)
from .partition import Partition, partitions_of, partitions_up_to
from .symfunc import SymFunc, degree_components


def _term_key(e):
    return (sum(e), tuple(-x for x in e))


class PolyN:
    """Sparse polynomial in ``x_1..x_N`` with integer coefficients."""

    __slots__ = ("nvars", "terms")
    _allow_negative = False

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise BadArity("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise BadArity("exponent vector %r has length %d, expected %d" % (e, len(e), nvars))
            if not self._allow_negative and any(x < 0 for x in e):
                raise ValueError("negative exponent in %r" % (e,))
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise NonIntegralInput("coefficient %s is not an integer" % c)
                c = c.numerator
            c = int(c)
            v = clean.get(e, 0) + c
            if v:
                clean[e] = v
            else:
                clean.pop(e, None)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def variable(cls, i, nvars):
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise BadArity("variable index %d outside 1..%d" % (i, nvars))
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]))

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other):
        if not isinstance(other, PolyN):
            return NotImplemented
        if other.nvars != self.nvars:
            raise BadArity("polynomials in %d and %d variables" % (self.nvars, other.nvars))
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other, self.nvars)
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._result_type(other)._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other, self.nvars)
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self)._raw(self.nvars, {})
            return type(self)._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._result_type(other)._raw(
            self.nvars, kernels.poly_mul(self.terms, other.terms, self.nvars))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = type(self).constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def _result_type(self, other):
        return LaurentPolyN if isinstance(other, LaurentPolyN) else type(self)

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyN.constant(other, self.nvars)
        if not isinstance(other, PolyN):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def key(self):
        return (self.nvars, tuple(self.items()))

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [{"exps": list(e), "coeff": str(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["nvars"], {tuple(t["exps"]): int(t["coeff"]) for t in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for e, c in self.items():
            mono = "*".join(
                ("x%d" % (i + 1)) + ("^%d" % x if x != 1 else "")
                for i, x in enumerate(e) if x)
            mag = abs(c)
            if not mono:
                text = str(mag)
            elif mag == 1:
                text = mono
            else:
                text = "%d*%s" % (mag, mono)
            if not out:
                out = ("-" if c < 0 else "") + text
            else:
                out += (" - " if c < 0 else " + ") + text
        return out

    def __repr__(self):
        return "%s(%d, %s)" % (type(self).__name__, self.nvars, self)


class LaurentPolyN(PolyN):
    """Sparse Laurent polynomial: exponents may be negative."""

    __slots__ = ()
    _allow_negative = True

    def _result_type(self, other):
        return LaurentPolyN


# -- expansion of basis elements -------------------------------------------

def _distinct_permutations(values):
    values = sorted(values, reverse=True)
    n = len(values)
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    out = []
    cur = []

    def rec():
        if len(cur) == n:
            out.append(tuple(cur))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                rec()
                cur.pop()
                counts[k] += 1

    rec()
    return out


def _monomial(lam, N):
    if len(lam) > N:
        return {}
    return {e: 1 for e in _distinct_permutations(list(lam) + [0] * (N - len(lam)))}


def _elementary(k, N):
    out = {}
    for idx in combinations(range(N), k):
        e = [0] * N
        for i in idx:
            e[i] = 1
        out[tuple(e)] = 1
    return out


def _complete(k, N):
    out = {}
    for idx in combinations_with_replacement(range(N), k):
        e = [0] * N
        for i in idx:
            e[i] += 1
        out[tuple(e)] = 1
    return out


def _power(k, N):
    out = {}
    for i in range(N):
        e = [0] * N
        e[i] = k
        out[tuple(e)] = 1
    return out


def _schur(lam, N):
    """Sum of x^T over semistandard tableaux T of shape ``lam`` with entries in 1..N."""
    if len(lam) > N:
        return {}
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    filling = {}
    weight = [0] * N
    out = {}

    def rec(k):
        if k == len(cells):
            key = tuple(weight)
            out[key] = out.get(key, 0) + 1
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = filling[(r, c - 1)]
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        # leave room for the cells below in this column
        below = sum(1 for rr in range(r + 1, len(lam)) if lam[rr] > c)
        hi = N - below
        for v in range(lo, hi + 1):
            filling[(r, c)] = v
            weight[v - 1] += 1
            rec(k + 1)
            weight[v - 1] -= 1
        filling.pop((r, c), None)

    rec(0)
    return out


_ONE_ROW = {"e": _elementary, "h": _complete, "p": _power}


@lru_cache(maxsize=4096)
def _basis_poly(basis, lam, N):
    """Expansion of ``b_lam`` in ``N`` variables as ``{exponents: int}``."""
    if basis == "m":
        return _monomial(lam, N)
    if basis == "s":
        return _schur(lam, N)
    one = {(0,) * N: 1}
    out = one
    for part in lam:
        out = kernels.poly_mul(out, _ONE_ROW[basis](part, N), N)
        if not out:
            break
    return out


def _expand_rational(f, N):
    acc = {}
    for lam, c in f.terms.items():
        for e, v in _basis_poly(f.basis, lam, N).items():
            w = acc.get(e, 0) + c * v
            if w:
                acc[e] = w
            else:
                acc.pop(e, None)
    return acc


def expand(f, N):
    """Image of ``f`` under x_i -> x_i (i <= N), x_i -> 0 (i > N)."""
    if N < 0:
        raise BadArity("number of variables must be nonnegative")
    if f.terms:
        check_degree(f.degree)
    acc = _expand_rational(f, N)
    terms = {}
    for e, c in acc.items():
        if c.denominator != 1:
            raise NonIntegralInput(
                "expansion of %s in %d variables has non-integral coefficient %s" % (f, N, c))
        terms[e] = c.numerator
    return PolyN._raw(N, terms)


def truncate_var(p, M):
    """Set ``x_{M+1}, ..., x_N`` to zero, giving a polynomial in ``M`` variables."""
    if M < 0 or M >= p.nvars:
        raise BadArity("need 0 <= M < %d, got %d" % (p.nvars, M))
    out = {e[:M]: c for e, c in p.terms.items() if not any(e[M:])}
    return type(p)._raw(M, out)


def is_symmetric(p):
    for i in range(p.nvars - 1):
        for e, c in p.terms.items():
            s = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
            if p.terms.get(s) != c:
                return False
    return True


def collect(p):
    """Monomial-basis symmetric function ``f`` with ``expand(f, nvars) == p``."""
    if not is_symmetric(p):
        raise NotSymmetric("polynomial is not invariant under permutations of its variables")
    d = p.degree()
    if d > p.nvars:
        raise DegreeExceedsVariables(
            "degree %d exceeds the %d variables; collection would not be unique" % (d, p.nvars))
    out = {}
    for e, c in p.terms.items():
        if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            out[Partition._trusted(tuple(x for x in e if x))] = Fraction(c)
    return SymFunc._raw("m", out)


def laurent_include(p):
    return LaurentPolyN._raw(p.nvars, dict(p.terms))


# -- multiplication through expansion ---------------------------------------

def _dominant_product(P, Q, d, N):
    """Coefficients of x^nu (nu a partition of d) in the product of P and Q."""
    out = {}
    for nu in partitions_of(d, max_rows=N):
        target = tuple(nu) + (0,) * (N - len(nu))
        total = 0
        for beta, a in P.items():
            rest = tuple(t - b for t, b in zip(target, beta))
            if any(x < 0 for x in rest):
                continue
            b = Q.get(rest)
            if b:
                total += a * b
        if total:
            out[nu] = Fraction(total)
    return out


def multiply_by_expansion(f, g):
    """Product of ``f`` and ``g`` (both in the m or both in the s basis).

    Each pair of homogeneous components of degrees a and b is expanded in
    N = a + b variables; only the coefficients of x^nu with nu a partition
    are read off the product, which is exactly what ``collect`` would keep.
    N = a + b makes this faithful.
    """
    basis = f.basis
    acc = SymFunc.zero("m")
    fc = degree_components(f)
    gc = degree_components(g)
    for a, fa in fc.items():
        for b, gb in gc.items():
            N = a + b
            check_degree(N)
            P = _expand_rational(fa, N)
            Q = _expand_rational(gb, N)
            acc = acc + SymFunc._raw("m", _dominant_product(P, Q, N, N))
    if basis == "m":
        return acc
    from .bases import convert
    return convert(acc, basis)


# -- splitting report --------------------------------------------------------

@dataclass
class SplittingReport:
    d: int
    N: int
    passed: bool
    checked: int
    distinct: bool
    vanishing_ok: bool
    independent: bool
    collisions: list = field(default_factory=list)
    wrong_vanishing: list = field(default_factory=list)

    def to_json(self):
        return {
            "d": self.d,
            "N": self.N,
            "passed": self.passed,
            "checked": self.checked,
            "distinct": self.distinct,
            "vanishing_ok": self.vanishing_ok,
            "independent": self.independent,
            "collisions": [[list(a), None if b is None else list(b)] for a, b in self.collisions],
            "wrong_vanishing": [list(a) for a in self.wrong_vanishing],
        }


def splitting_injectivity_report(d, N=None):
    """Check that Schur functions of degree <= d stay distinct in N variables.

    ``N`` defaults to ``d``. A smaller ``N`` is a diagnostic mode: Schur
    functions with more than ``N`` rows vanish and are reported as
    collisions with zero.
    """
    check_degree(d)
    if N is None:
        N = d
    seen = {}
    collisions = []
    wrong_vanishing = []
    images = {}
    lams = partitions_up_to(d)
    for lam in lams:
        img = expand(SymFunc._raw("s", {lam: Fraction(1)}), N)
        images[lam] = img
        vanishes = not img
        if vanishes != (len(lam) > N):
            wrong_vanishing.append(lam)
        if vanishes:
            collisions.append((lam, None))
            continue
        k = img.key()
        if k in seen:
            collisions.append((seen[k], lam))
        else:
            seen[k] = lam
    distinct = not collisions
    independent = True
    for deg in range(d + 1):
        block = [images[lam] for lam in partitions_of(deg)]
        if not independent_columns([p.terms for p in block]):
            independent = False
    return SplittingReport(
        d=d, N=N,
        passed=distinct and not wrong_vanishing and independent,
        checked=len(lams), distinct=distinct,
        vanishing_ok=not wrong_vanishing, independent=independent,
        collisions=collisions, wrong_vanishing=wrong_vanishing)
