"""Exact change of basis among m, e, h, p, s.

Routing: everything passes through the monomial basis, except
s -> h (Jacobi-Trudi), s -> m (Kostka numbers) and p <-> e, h (Newton's
identities). Out of m, the e, s and p transitions are triangular in
dominance order and are inverted by back-substitution; m -> h goes
m -> s -> h.
"""
from fractions import Fraction
from functools import lru_cache

from .config import check_degree
from .errors import DegreeMismatch
from .partition import Partition, conjugate, horizontal_strips, partitions_of
from .symfunc import SymFunc, generator, multiply

__all__ = [
    "convert", "kostka_number", "jacobi_trudi", "dual_jacobi_trudi",
    "transition_to_m",
]


# -- coefficients of x^mu in products of one-row generators --------------------

def _ways_elementary(k, rem):
    # choose k distinct positions, each with rem >= 1
    out = []

    def rec(i, left, cur):
        if left == 0:
            out.append(tuple(cur))
            return
        if len(rem) - i < left:
            return
        if rem[i] >= 1:
            cur[i] -= 1
            rec(i + 1, left - 1, cur)
            cur[i] += 1
        rec(i + 1, left, cur)

    rec(0, k, list(rem))
    return [(r, 1) for r in out]


def _ways_complete(k, rem):
    out = []

    def rec(i, left, cur):
        if left == 0:
            out.append(tuple(cur))
            return
        if i == len(rem):
            return
        for take in range(min(left, rem[i]), -1, -1):
            cur[i] -= take
            rec(i + 1, left - take, cur)
            cur[i] += take

    rec(0, k, list(rem))
    return [(r, 1) for r in out]


def _ways_power(k, rem):
    out = []
    for i, r in enumerate(rem):
        if r >= k:
            cur = list(rem)
            cur[i] -= k
            out.append((tuple(cur), 1))
    return out


_WAYS = {"e": _ways_elementary, "h": _ways_complete, "p": _ways_power}


@lru_cache(maxsize=None)
def _count(basis, parts, rem):
    """Coefficient of x^rem in the product of b_k over k in ``parts``."""
    if not parts:
        return 1 if not any(rem) else 0
    total = 0
    for nxt, w in _WAYS[basis](parts[0], rem):
        canon = tuple(sorted(nxt, reverse=True))
        total += w * _count(basis, parts[1:], canon)
    return total


def kostka_number(lam, mu):
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    The largest entry of such a tableau occupies a horizontal strip, so the
    count recurses over strips removed from ``lam``.
    """
    lam = Partition(lam)
    mu = tuple(int(x) for x in mu)
    if sum(lam) != sum(mu):
        raise DegreeMismatch("|%s| != |%s|" % (list(lam), list(mu)))
    return _kostka(tuple(lam), tuple(x for x in mu if x))


@lru_cache(maxsize=None)
def _kostka(lam, mu):
    if not mu:
        return 1 if not lam else 0
    total = 0
    for nu in horizontal_strips(lam, mu[-1]):
        total += _kostka(tuple(nu), mu[:-1])
    return total


def transition_to_m(basis, lam):
    """Coefficients of ``b_lam`` in the monomial basis, as ``{mu: int}``."""
    return dict(_transition_to_m(basis, Partition(lam)))


@lru_cache(maxsize=None)
def _transition_to_m(basis, lam):
    n = lam.degree
    check_degree(n)
    if basis == "m":
        return {lam: 1}
    out = {}
    for mu in partitions_of(n):
        if basis == "s":
            c = _kostka(tuple(lam), tuple(mu))
        else:
            c = _count(basis, tuple(lam), tuple(mu) + (0,) * (n - len(mu)))
        if c:
            out[mu] = c
    return out


# -- inverting triangular transitions out of m ----------------------------------

def _solve(n, forward, order):
    """Express every m_lam of degree n in the basis whose elements ``forward`` expands.

    ``forward(lam)`` returns ``(label, {mu: coeff})``: the target basis element
    labelled ``label`` equals ``sum coeff * m_mu``, with ``mu == lam`` present
    and every other ``mu`` already solved earlier in ``order``.
    """
    solved = {}
    for lam in order:
        label, expansion = forward(lam)
        lead = Fraction(expansion[lam])
        acc = {label: Fraction(1)}
        for mu, c in expansion.items():
            if mu == lam:
                continue
            for nu, v in solved[mu].items():
                w = acc.get(nu, 0) - c * v
                if w:
                    acc[nu] = w
                else:
                    acc.pop(nu, None)
        solved[lam] = {nu: v / lead for nu, v in acc.items()}
    return solved


@lru_cache(maxsize=None)
def _m_to(target, n):
    check_degree(n)
    parts = partitions_of(n)
    if target == "e":
        # e_{lam'} = m_lam + lower terms in dominance
        return _solve(n, lambda lam: (conjugate(lam), _transition_to_m("e", conjugate(lam))),
                      reversed(parts))
    if target == "s":
        return _solve(n, lambda lam: (lam, _transition_to_m("s", lam)), reversed(parts))
    if target == "p":
        # p_lam = c * m_lam + terms dominating lam
        return _solve(n, lambda lam: (lam, _transition_to_m("p", lam)), parts)
    raise ValueError(target)


# -- Jacobi-Trudi -----------------------------------------------------------------

def _determinant(entry, size, basis):
    """Determinant of a size x size matrix of symmetric functions (Laplace expansion)."""
    memo = {}

    def rec(row, used):
        if row == size:
            return SymFunc.one(basis)
        key = (row, used)
        if key in memo:
            return memo[key]
        acc = SymFunc.zero(basis)
        sign = 1
        for col in range(size):
            if used >> col & 1:
                continue
            a = entry(row, col)
            if a:
                term = multiply(a, rec(row + 1, used | (1 << col)))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    return rec(0, 0)


def _one_row(basis, k):
    if k < 0:
        return SymFunc.zero(basis)
    return generator(basis, (k,) if k else ())


@lru_cache(maxsize=None)
def _jacobi_trudi(lam):
    L = len(lam)
    return _determinant(lambda i, j: _one_row("h", lam[i] - i + j), L, "h")


def jacobi_trudi(lam):
    """s_lam as det(h_{lam_i - i + j}) in the h basis."""
    lam = Partition(lam)
    check_degree(lam.degree)
    return _jacobi_trudi(lam)


@lru_cache(maxsize=None)
def _dual_jacobi_trudi(lam):
    conj = conjugate(lam)
    L = len(conj)
    return _determinant(lambda i, j: _one_row("e", conj[i] - i + j), L, "e")


def dual_jacobi_trudi(lam):
    """s_lam as det(e_{lam'_i - i + j}) in the e basis."""
    lam = Partition(lam)
    check_degree(lam.degree)
    return _dual_jacobi_trudi(lam)


# -- Newton's identities -------------------------------------------------------------

@lru_cache(maxsize=None)
def _power_in(target, n):
    """p_n in the e or h basis."""
    if target == "h":
        # p_n = n h_n - sum_{i<n} p_i h_{n-i}
        acc = generator("h", (n,)).scale(n)
        for i in range(1, n):
            acc = acc - multiply(_power_in("h", i), generator("h", (n - i,)))
        return acc
    # p_n = (-1)^(n-1) n e_n + sum_{i<n} (-1)^(n-1+i) e_{n-i} p_i
    acc = generator("e", (n,)).scale((-1) ** (n - 1) * n)
    for i in range(1, n):
        term = multiply(generator("e", (n - i,)), _power_in("e", i))
        acc = acc + term.scale((-1) ** (n - 1 + i))
    return acc


@lru_cache(maxsize=None)
def _one_row_in_p(source, n):
    """e_n or h_n in the p basis."""
    if n == 0:
        return SymFunc.one("p")
    acc = SymFunc.zero("p")
    for i in range(1, n + 1):
        term = multiply(generator("p", (i,)), _one_row_in_p(source, n - i))
        if source == "e" and i % 2 == 0:
            term = -term
        acc = acc + term
    return acc.scale(Fraction(1, n))


def _multiplicative(piece, lam, target):
    out = SymFunc.one(target)
    for part in lam:
        out = multiply(out, piece(part))
    return out


# -- routing -------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _element(source, target, lam):
    """b_lam (source basis) written in the target basis, as a SymFunc."""
    if source == target:
        return generator(target, lam)
    n = lam.degree
    check_degree(n)
    if not lam:
        return SymFunc.one(target)
    if target == "m":
        return SymFunc("m", _transition_to_m(source, lam))
    if source == "m":
        if target in ("e", "s", "p"):
            return SymFunc._raw(target, dict(_m_to(target, n)[lam]))
        return _via(_element("m", "s", lam), "h")
    if source == "s" and target == "h":
        return jacobi_trudi(lam)
    if source == "p" and target in ("e", "h"):
        return _multiplicative(lambda k: _power_in(target, k), lam, target)
    if source in ("e", "h") and target == "p":
        return _multiplicative(lambda k: _one_row_in_p(source, k), lam, "p")
    return _via(_element(source, "m", lam), target)


def _via(f, target):
    acc = {}
    for lam, c in f.terms.items():
        for nu, v in _element(f.basis, target, lam).terms.items():
            w = acc.get(nu, 0) + c * v
            if w:
                acc[nu] = w
            else:
                acc.pop(nu, None)
    return SymFunc._raw(target, acc)


def convert(f, target):
    """Rewrite ``f`` in the ``target`` basis; the result is equal to ``f``."""
    if target not in ("m", "e", "h", "p", "s"):
        raise ValueError("unknown basis %r" % (target,))
    if f.basis == target:
        return f
    if f.terms:
        check_degree(f.degree)
    return _via(f, target)
