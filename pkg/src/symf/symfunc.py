"""Elements of the ring of symmetric functions over the rationals."""
from fractions import Fraction
from numbers import Rational

from .errors import MixedBases, SymfError
from .partition import Partition, union

BASES = ("m", "e", "h", "p", "s")
MULTIPLICATIVE = ("e", "h", "p")


def _check_basis(basis):
    if basis not in BASES:
        raise SymfError("unknown basis %r (expected one of %s)" % (basis, ", ".join(BASES)))
    return basis


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError("coefficients must be exact rationals, got %r" % (c,))


class SymFunc:
    """A finite rational combination of basis elements ``b_lambda``.

    ``terms`` maps :class:`Partition` to :class:`fractions.Fraction`; zero
    coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None):
        self.basis = _check_basis(basis)
        clean = {}
        if terms:
            for lam, c in terms.items():
                c = _coerce(c)
                if c:
                    lam = Partition(lam)
                    c = clean.get(lam, 0) + c
                    if c:
                        clean[lam] = c
                    else:
                        clean.pop(lam, None)
        self.terms = clean

    @classmethod
    def _raw(cls, basis, terms):
        # terms already pruned, keyed by Partition, valued by Fraction
        obj = object.__new__(cls)
        obj.basis = basis
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, basis="s"):
        return cls._raw(_check_basis(basis), {})

    @classmethod
    def one(cls, basis="s"):
        return cls._raw(_check_basis(basis), {Partition(): Fraction(1)})

    @classmethod
    def scalar(cls, c, basis="s"):
        c = _coerce(c)
        return cls._raw(_check_basis(basis), {Partition(): c} if c else {})

    # -- inspection -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, lam):
        return self.terms.get(Partition(lam), Fraction(0))

    def degrees(self):
        return sorted({lam.degree for lam in self.terms})

    @property
    def degree(self):
        """Largest degree present; -1 for zero."""
        return max((lam.degree for lam in self.terms), default=-1)

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def is_integral(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def key(self):
        """Hashable canonical form (basis-dependent)."""
        return (self.basis, tuple((tuple(lam), c) for lam, c in self.items()))

    # -- arithmetic -------------------------------------------------------

    def _same_basis(self, other):
        if self.basis != other.basis:
            raise MixedBases("bases %r and %r differ; convert first" % (self.basis, other.basis))

    def _lift(self, other):
        if isinstance(other, SymFunc):
            return other
        if isinstance(other, (int, Rational)):
            return SymFunc.scalar(other, self.basis)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        self._same_basis(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            v = out.get(lam, 0) + c
            if v:
                out[lam] = v
            else:
                out.pop(lam, None)
        return SymFunc._raw(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return SymFunc._raw(self.basis, {})
        return SymFunc._raw(self.basis, {lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SymFunc.one(self.basis)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = SymFunc.scalar(other, self.basis)
        if not isinstance(other, SymFunc):
            return NotImplemented
        return equals(self, other)

    __hash__ = None

    # -- conversions ------------------------------------------------------

    def convert(self, target):
        from .bases import convert
        return convert(self, target)

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "num": str(c.numerator), "den": str(c.denominator)}
                for lam, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data):
        terms = {}
        for t in data["terms"]:
            lam = Partition(t["partition"])
            terms[lam] = terms.get(lam, 0) + Fraction(int(t["num"]), int(t["den"]))
        return cls(data["basis"], terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.items():
            if not lam:
                body = None
            else:
                body = "%s[%s]" % (self.basis, ",".join(str(p) for p in lam))
            mag = abs(c)
            if body is None:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = "%s*%s" % (mag, body)
            pieces.append(("-" if c < 0 else "+", text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += " %s %s" % (sign, text)
        return out

    def __repr__(self):
        return "SymFunc(%r, %s)" % (self.basis, str(self))


def generator(basis, lam=()):
    """The basis element ``b_lambda``; the empty partition gives the unit."""
    return SymFunc._raw(_check_basis(basis), {Partition(lam): Fraction(1)})


def linear_combine(coeffs, fs):
    coeffs = list(coeffs)
    fs = list(fs)
    if len(coeffs) != len(fs):
        raise ValueError("need one coefficient per function")
    if not fs:
        return SymFunc.zero()
    basis = fs[0].basis
    for f in fs:
        if f.basis != basis:
            raise MixedBases("linear_combine needs a single basis; got %r and %r" % (basis, f.basis))
    out = {}
    for c, f in zip(coeffs, fs):
        c = _coerce(c)
        if not c:
            continue
        for lam, v in f.terms.items():
            w = out.get(lam, 0) + c * v
            if w:
                out[lam] = w
            else:
                out.pop(lam, None)
    return SymFunc._raw(basis, out)


def degree_components(f):
    out = {}
    for lam, c in f.terms.items():
        out.setdefault(lam.degree, {})[lam] = c
    return {d: SymFunc._raw(f.basis, t) for d, t in sorted(out.items())}


def multiply(f, g):
    if f.basis != g.basis:
        raise MixedBases("bases %r and %r differ; convert first" % (f.basis, g.basis))
    if not f.terms or not g.terms:
        return SymFunc._raw(f.basis, {})
    if f.basis in MULTIPLICATIVE:
        out = {}
        for lam, a in f.terms.items():
            for mu, b in g.terms.items():
                nu = union(lam, mu)
                v = out.get(nu, 0) + a * b
                if v:
                    out[nu] = v
                else:
                    out.pop(nu, None)
        return SymFunc._raw(f.basis, out)
    from .truncation import multiply_by_expansion
    return multiply_by_expansion(f, g)


def equals(f, g):
    """Equality in the ring, independent of the bases ``f`` and ``g`` are written in."""
    if f.basis == g.basis:
        return f.terms == g.terms
    if not f.terms and not g.terms:
        return True
    from .bases import convert
    a = f if f.basis == "m" else convert(f, "m")
    b = g if g.basis == "m" else convert(g, "m")
    return a.terms == b.terms
