"""A small expression language over symmetric functions.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" nat)?
    atom   := int | gen | "(" expr ")"
            | "omega" "(" expr ")" | "plethysm" "(" expr "," expr ")"
            | ("adams" | "lambda" | "sigma") "(" nat "," expr ")"
    gen    := ("e" | "h" | "p" | "m" | "s") "[" nat ("," nat)* "]"

Sums and products associate to the left, and the printer emits the fewest
parentheses that reparse to the same tree.
"""
from dataclasses import dataclass

from .bases import convert
from .config import check_degree
from .errors import NonPositivePart, ParseError, SymfError
from .lambda_ops import adams, lambda_power, omega, plethysm, sigma_power
from .partition import Partition
from .symfunc import BASES, MULTIPLICATIVE, SymFunc, generator, multiply


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Gen:
    basis: str
    partition: Partition


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-" or "*"
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Omega:
    arg: object


@dataclass(frozen=True)
class Plethysm:
    outer: object
    inner: object


@dataclass(frozen=True)
class Call:
    """adams, lambda or sigma applied to a natural number and an expression."""
    name: str
    k: int
    arg: object


CALLS = ("adams", "lambda", "sigma")
KEYWORDS = ("omega", "plethysm") + CALLS


# -- tokenizer ----------------------------------------------------------------------

@dataclass
class Token:
    kind: str  # "int", "name", a punctuation character, or "end"
    text: str
    offset: int


_PUNCT = set(b"+-*^()[],")


def tokenize(text):
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    out = []
    i = 0
    n = len(data)
    while i < n:
        ch = data[i]
        if ch in b" \t\r\n":
            i += 1
        elif 48 <= ch <= 57:
            j = i
            while j < n and 48 <= data[j] <= 57:
                j += 1
            out.append(Token("int", data[i:j].decode(), i))
            i = j
        elif 97 <= ch <= 122 or 65 <= ch <= 90:
            j = i
            while j < n and (97 <= data[j] <= 122 or 65 <= data[j] <= 90):
                j += 1
            out.append(Token("name", data[i:j].decode(), i))
            i = j
        elif ch in _PUNCT:
            out.append(Token(chr(ch), chr(ch), i))
            i += 1
        else:
            raise ParseError(i, ["expression"], "unexpected byte 0x%02x" % ch)
    out.append(Token("end", "", n))
    return out


# -- parser -------------------------------------------------------------------------

_ATOM_START = ["'('", "integer"] + ["%s[" % b for b in BASES] + list(KEYWORDS)


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def fail(self, expected):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(tok.offset, expected,
                         "expected %s, found %s" % (" or ".join(sorted(set(expected))), found))

    def expect(self, kind):
        if self.tok.kind != kind:
            self.fail(["'%s'" % kind])
        tok = self.tok
        self.pos += 1
        return tok

    def nat(self):
        if self.tok.kind != "int":
            self.fail(["integer"])
        tok = self.tok
        self.pos += 1
        return int(tok.text)

    def expr(self):
        node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.tok.kind
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.tok.kind == "*":
            self.pos += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.tok.kind == "^":
            self.pos += 1
            node = Pow(node, self.nat())
        return node

    def atom(self):
        tok = self.tok
        if tok.kind == "int":
            self.pos += 1
            return Int(int(tok.text))
        if tok.kind == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind != "name":
            self.fail(_ATOM_START)
        name = tok.text
        if name in BASES:
            self.pos += 1
            return self.generator(name)
        if name not in KEYWORDS:
            self.fail(_ATOM_START)
        self.pos += 1
        self.expect("(")
        if name == "omega":
            node = Omega(self.expr())
        elif name == "plethysm":
            outer = self.expr()
            self.expect(",")
            node = Plethysm(outer, self.expr())
        else:
            k = self.nat()
            self.expect(",")
            node = Call(name, k, self.expr())
        self.expect(")")
        return node

    def generator(self, basis):
        self.expect("[")
        start = self.tok.offset
        parts = [self.nat()]
        while self.tok.kind == ",":
            self.pos += 1
            parts.append(self.nat())
        self.expect("]")
        try:
            lam = Partition(parts)
        except NonPositivePart as exc:
            raise ParseError(start, ["positive integer"], str(exc)) from None
        return Gen(basis, lam)


def parse_expr(text):
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    p = _Parser(text)
    node = p.expr()
    if p.tok.kind != "end":
        p.fail(["'+'", "'-'", "'*'", "'^'", "end of input"])
    return node


# -- printer ------------------------------------------------------------------------

_SUM, _PRODUCT, _POWER, _ATOM = 1, 2, 3, 4


def _prec(node):
    if isinstance(node, BinOp):
        return _SUM if node.op in "+-" else _PRODUCT
    if isinstance(node, Pow):
        return _POWER
    return _ATOM


def _wrap(node, need):
    text = print_expr(node)
    return "(%s)" % text if _prec(node) < need else text


def print_expr(node):
    if isinstance(node, Int):
        return str(node.value)
    if isinstance(node, Gen):
        return "%s[%s]" % (node.basis, ",".join(str(x) for x in node.partition))
    if isinstance(node, BinOp):
        if node.op == "*":
            return "%s*%s" % (_wrap(node.left, _PRODUCT), _wrap(node.right, _POWER))
        return "%s %s %s" % (_wrap(node.left, _SUM), node.op, _wrap(node.right, _PRODUCT))
    if isinstance(node, Pow):
        return "%s^%d" % (_wrap(node.base, _ATOM), node.exponent)
    if isinstance(node, Omega):
        return "omega(%s)" % print_expr(node.arg)
    if isinstance(node, Plethysm):
        return "plethysm(%s, %s)" % (print_expr(node.outer), print_expr(node.inner))
    if isinstance(node, Call):
        return "%s(%d, %s)" % (node.name, node.k, print_expr(node.arg))
    raise TypeError("not an expression node: %r" % (node,))


# -- evaluation ---------------------------------------------------------------------

def first_basis(node):
    """Basis of the leftmost generator in ``node``, or None."""
    if isinstance(node, Gen):
        return node.basis
    if isinstance(node, Int):
        return None
    for child in _children(node):
        b = first_basis(child)
        if b is not None:
            return b
    return None


def _children(node):
    if isinstance(node, BinOp):
        return (node.left, node.right)
    if isinstance(node, Pow):
        return (node.base,)
    if isinstance(node, Omega):
        return (node.arg,)
    if isinstance(node, Plethysm):
        return (node.outer, node.inner)
    if isinstance(node, Call):
        return (node.arg,)
    return ()


def _checked(f):
    if f.terms:
        check_degree(f.degree)
    return f


def _eval(node, work):
    if isinstance(node, Int):
        return SymFunc.scalar(node.value, work)
    if isinstance(node, Gen):
        check_degree(node.partition.degree)
        return convert(generator(node.basis, node.partition), work)
    if isinstance(node, BinOp):
        a = _eval(node.left, work)
        b = _eval(node.right, work)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if a.terms and b.terms:
            check_degree(a.degree + b.degree)
        return multiply(a, b)
    if isinstance(node, Pow):
        base = _eval(node.base, work)
        if base.terms:
            check_degree(base.degree * node.exponent)
        return base ** node.exponent
    if isinstance(node, Omega):
        return omega(_eval(node.arg, work))
    if isinstance(node, Plethysm):
        f = _eval(node.outer, work)
        g = _eval(node.inner, work)
        return _checked(convert(plethysm(f, g), work))
    if isinstance(node, Call):
        f = _eval(node.arg, work)
        if node.name == "adams":
            if node.k < 1:
                raise SymfError("adams needs k >= 1")
            out = adams(node.k, f)
        elif node.name == "lambda":
            out = lambda_power(node.k, f)
        else:
            out = sigma_power(node.k, f)
        return _checked(convert(out, work))
    raise TypeError("not an expression node: %r" % (node,))


def evaluate(node, basis=None, work=None):
    """Value of an expression tree as a SymFunc.

    The result is returned in ``basis``, defaulting to the basis of the
    leftmost generator (p if the expression has none). Arithmetic happens in
    the ``work`` basis: by default the output basis when it is e, h or p,
    where products are concatenations, and p otherwise.
    """
    if isinstance(node, str):
        node = parse_expr(node)
    if basis is None:
        basis = first_basis(node) or "p"
    if work is None:
        work = basis if basis in MULTIPLICATIVE else "p"
    if basis not in BASES or work not in BASES:
        raise SymfError("unknown basis")
    return convert(_eval(node, work), basis)
