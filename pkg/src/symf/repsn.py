"""Characters of the symmetric groups and the Frobenius characteristic map.

Class functions are stored on cycle types; group elements are never listed.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bases import convert
from .config import check_degree
from .errors import DegreeMismatch, NonIntegralMultiplicity, NotHomogeneous, SymfError
from .partition import Partition, partitions_of, z_factor
from .symfunc import SymFunc


class ClassFunction:
    """A rational-valued function on the conjugacy classes of S_n."""

    __slots__ = ("n", "values")

    def __init__(self, n, values=None):
        if n < 0:
            raise SymfError("n must be nonnegative")
        self.n = n
        vals = {mu: Fraction(0) for mu in partitions_of(n)}
        for mu, v in (values or {}).items():
            mu = Partition(mu)
            if mu.degree != n:
                raise DegreeMismatch("class %s is not a partition of %d" % (list(mu), n))
            vals[mu] = Fraction(v)
        self.values = vals

    def __getitem__(self, mu):
        return self.values[Partition(mu)]

    def classes(self):
        return list(self.values)

    def _check(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if other.n != self.n:
            raise DegreeMismatch("class functions on S_%d and S_%d" % (self.n, other.n))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ClassFunction(self.n, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ClassFunction(self.n, {mu: v - other.values[mu] for mu, v in self.values.items()})

    def __neg__(self):
        return ClassFunction(self.n, {mu: -v for mu, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            other = self._check(other)
            return ClassFunction(self.n, {mu: v * other.values[mu] for mu, v in self.values.items()})
        if isinstance(other, (int, Fraction)):
            return ClassFunction(self.n, {mu: v * other for mu, v in self.values.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    __hash__ = None

    def to_json(self):
        return {
            "n": self.n,
            "values": [
                {"class": list(mu), "num": str(v.numerator), "den": str(v.denominator)}
                for mu, v in self.values.items()
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], {tuple(t["class"]): Fraction(int(t["num"]), int(t["den"]))
                               for t in data["values"]})

    def __repr__(self):
        body = ", ".join("%s: %s" % (mu, v) for mu, v in self.values.items())
        return "ClassFunction(%d, {%s})" % (self.n, body)


class VirtualRep:
    """Integer combination of irreducible representations, one per partition."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for lam, m in (terms or {}).items():
            if isinstance(m, Fraction):
                if m.denominator != 1:
                    raise NonIntegralMultiplicity("multiplicity %s is not an integer" % m)
                m = m.numerator
            lam = Partition(lam)
            v = clean.get(lam, 0) + int(m)
            if v:
                clean[lam] = v
            else:
                clean.pop(lam, None)
        self.terms = clean

    def items(self):
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __add__(self, other):
        out = dict(self.terms)
        for lam, m in other.terms.items():
            out[lam] = out.get(lam, 0) + m
        return VirtualRep(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return VirtualRep({lam: -m for lam, m in self.terms.items()})

    def __rmul__(self, k):
        return VirtualRep({lam: k * m for lam, m in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def to_json(self):
        return {"terms": [{"partition": list(lam), "mult": str(m)} for lam, m in self.items()]}

    @classmethod
    def from_json(cls, data):
        return cls({tuple(t["partition"]): int(t["mult"]) for t in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for lam, m in self.items():
            text = str(lam) if abs(m) == 1 else "%d*%s" % (abs(m), lam)
            if not out:
                out = ("-" if m < 0 else "") + text
            else:
                out += (" - " if m < 0 else " + ") + text
        return out

    def __repr__(self):
        return "VirtualRep(%s)" % self


# -- Murnaghan-Nakayama ------------------------------------------------------------

@lru_cache(maxsize=None)
def _mn(lam, mu):
    """chi^lam at cycle type mu, removing border strips of length mu[0] first.

    Works on the beta-set (first-column hook lengths): removing a border strip
    of length r moves one bead from b to b - r; the strip's height is the
    number of beads strictly between the two positions.
    """
    if not mu:
        return 1 if not lam else 0
    r = mu[0]
    L = len(lam)
    beta = [lam[i] + L - 1 - i for i in range(L)]
    occupied = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted(beta[:i] + [nb] + beta[i + 1:], reverse=True)
        shape = tuple(x - (L - 1 - j) for j, x in enumerate(new))
        shape = tuple(p for p in shape if p > 0)
        term = _mn(shape, mu[1:])
        total += -term if height % 2 else term
    return total


def character_value(lam, mu):
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.degree != mu.degree:
        raise DegreeMismatch("|%s| != |%s|" % (list(lam), list(mu)))
    return _mn(tuple(lam), tuple(mu))


def irreducible_character(lam):
    lam = Partition(lam)
    check_degree(lam.degree)
    return ClassFunction(lam.degree, {mu: _mn(tuple(lam), tuple(mu)) for mu in partitions_of(lam.degree)})


def character_table(n):
    """Irreducible characters of S_n, one per partition, in canonical order."""
    return [irreducible_character(lam) for lam in partitions_of(n)]


def trivial_character(n):
    return ClassFunction(n, {mu: 1 for mu in partitions_of(n)})


def sign_character(n):
    return ClassFunction(n, {mu: (-1) ** (n - len(mu)) for mu in partitions_of(n)})


def regular_character(n):
    return ClassFunction(n, {(1,) * n: factorial(n)})


def tensor_power_character(N, n):
    """Character of S_n permuting the factors of (k^N)^{tensor n}: N^(number of cycles)."""
    return ClassFunction(n, {mu: N ** len(mu) for mu in partitions_of(n)})


def inner_product(chi, xi):
    if chi.n != xi.n:
        raise DegreeMismatch("class functions on S_%d and S_%d" % (chi.n, xi.n))
    return sum((chi.values[mu] * xi.values[mu] / z_factor(mu) for mu in chi.values), Fraction(0))


def decompose(chi):
    """Multiplicities of the irreducibles in ``chi``; raises unless they are integers."""
    out = {}
    for lam in partitions_of(chi.n):
        m = inner_product(chi, irreducible_character(lam))
        if m.denominator != 1:
            raise NonIntegralMultiplicity(
                "<chi, chi^%s> = %s is not an integer" % (list(lam), m))
        if m:
            out[lam] = m.numerator
    return VirtualRep(out)


def frobenius(chi):
    """Frobenius characteristic: sum over classes of chi(mu)/z_mu * p_mu."""
    return SymFunc("p", {mu: v / z_factor(mu) for mu, v in chi.values.items()})


def inverse_frobenius(f, n=None):
    """The class function whose characteristic is ``f`` (homogeneous of degree n)."""
    degrees = f.degrees()
    if len(degrees) > 1:
        raise NotHomogeneous("degrees %s present" % degrees)
    if degrees:
        if n is not None and n != degrees[0]:
            raise NotHomogeneous("expected degree %d, got %d" % (n, degrees[0]))
        n = degrees[0]
    elif n is None:
        raise NotHomogeneous("the degree of zero is ambiguous; pass n")
    fp = convert(f, "p")
    return ClassFunction(n, {mu: c * z_factor(mu) for mu, c in fp.terms.items()})


def sign_twist(chi):
    return chi * sign_character(chi.n)


def k_of_F(v):
    """A virtual representation's class, as a Schur-basis symmetric function."""
    return SymFunc("s", {lam: m for lam, m in v.terms.items()})
