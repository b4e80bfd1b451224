"""Plethysm, Adams operations, lambda and sigma powers, and the involution omega."""
from functools import lru_cache
from math import comb

from . import kernels
from .bases import convert
from .config import check_degree
from .errors import SymfError
from .partition import Partition, conjugate
from .symfunc import SymFunc, generator, multiply
from .truncation import PolyN, collect, expand


def _p_substitute(n, g_p):
    """p_n[g] for g in the p basis: every p_k becomes p_{nk}."""
    return SymFunc._raw("p", {Partition._trusted(tuple(n * x for x in lam)): c
                              for lam, c in g_p.terms.items()})


def plethysm(f, g):
    """f[g], computed in the power-sum basis; the result is in the p basis."""
    df = max(f.degree, 0)
    dg = max(g.degree, 0)
    check_degree(df * dg)
    fp = convert(f, "p")
    gp = convert(g, "p")
    cache = {}
    out = SymFunc.zero("p")
    for lam, c in fp.terms.items():
        term = SymFunc.scalar(c, "p")
        for part in lam:
            if part not in cache:
                cache[part] = _p_substitute(part, gp)
            term = multiply(term, cache[part])
        out = out + term
    return out


def adams(n, f):
    """psi^n(f) = p_n[f], in the p basis."""
    if n < 1:
        raise SymfError("Adams operations are indexed by positive integers")
    if f.terms:
        check_degree(n * f.degree)
    return _p_substitute(n, convert(f, "p"))


def lambda_power(n, f):
    """lambda^n(f) = e_n[f]."""
    if n < 0:
        raise SymfError("lambda powers need n >= 0")
    return plethysm(generator("e", (n,) if n else ()), f)


def sigma_power(n, f):
    """sigma^n(f) = h_n[f]."""
    if n < 0:
        raise SymfError("sigma powers need n >= 0")
    return plethysm(generator("h", (n,) if n else ()), f)


def omega(f):
    """The involution with omega(e_n) = h_n, returned in the basis of ``f``."""
    b = f.basis
    if b == "e":
        return _relabel(f, "h", "e")
    if b == "h":
        return _relabel(f, "e", "h")
    if b == "p":
        return SymFunc._raw("p", {lam: c if (sum(lam) - len(lam)) % 2 == 0 else -c
                                  for lam, c in f.terms.items()})
    if b == "s":
        return SymFunc._raw("s", {conjugate(lam): c for lam, c in f.terms.items()})
    # m has no direct rule: go through e
    return convert(omega(convert(f, "e")), "m")


def _relabel(f, as_basis, back_to):
    # omega(e_lam) = h_lam: reinterpret the labels, then rewrite in the original basis
    return convert(SymFunc._raw(as_basis, dict(f.terms)), back_to)


def omega_routes(f):
    """omega(f) computed through the e/h, p and s rules, all returned in the m basis."""
    via_e = convert(_relabel(convert(f, "e"), "h", "h"), "m")
    via_p = convert(omega(convert(f, "p")), "m")
    via_s = convert(omega(convert(f, "s")), "m")
    return {"e": via_e, "p": via_p, "s": via_s}


# -- independent oracle: substitute monomials ---------------------------------------

def _monomials_of(g, N):
    poly = expand(g, N)
    ys = []
    for e, c in poly.items():
        if c < 0:
            raise SymfError("the substitution oracle needs g with nonnegative coefficients")
        ys.append((e, c))
    return ys


def _shift(poly, e, k, scale):
    out = {}
    for x, c in poly.items():
        out[tuple(a + k * b for a, b in zip(x, e))] = c * scale
    return out


def _add_into(acc, poly):
    for x, c in poly.items():
        v = acc.get(x, 0) + c
        if v:
            acc[x] = v
        else:
            acc.pop(x, None)


def elementary_of_monomials(g, kmax, N):
    """[e_0[g], ..., e_kmax[g]] in N variables, by treating each monomial of g as a variable.

    e_k of a multiset of monomials is the t^k coefficient of the product of
    (1 + t*y) over the multiset.
    """
    ys = _monomials_of(g, N)
    zero = (0,) * N
    E = [{zero: 1}] + [{} for _ in range(kmax)]
    for y, mult in ys:
        for j in range(kmax, 0, -1):
            for i in range(1, min(mult, j) + 1):
                if E[j - i]:
                    _add_into(E[j], _shift(E[j - i], y, i, comb(mult, i)))
    return E


def plethysm_by_substitution(f, g, N=None):
    """f[g] through monomial substitution, in the m basis.

    ``g`` is expanded into monomials in N variables (default: deg f * deg g,
    enough for the result to be faithful); ``f`` is written in the e basis
    and each e_k is evaluated on the multiset of monomials of ``g``.
    """
    df = max(f.degree, 0)
    dg = max(g.degree, 0)
    if N is None:
        N = max(1, df * dg)
    fe = convert(f, "e")
    out = SymFunc.zero("m")
    for lam, c in fe.terms.items():
        out = out + _elementary_product(g.basis, _terms_key(g), N, lam).scale(c)
    return out


def _terms_key(g):
    return tuple(sorted(g.terms.items()))


@lru_cache(maxsize=4096)
def _elementary_product(basis, key, N, lam):
    """e_lam[g] in N variables, collected into the m basis."""
    if not lam:
        return SymFunc.one("m")
    E = _elementary_table(basis, key, N, max(lam))
    prod = {(0,) * N: 1}
    for part in lam:
        prod = kernels.poly_mul(prod, E[part], N)
    return collect(PolyN(N, prod)) if prod else SymFunc.zero("m")


@lru_cache(maxsize=256)
def _elementary_table(basis, key, N, kmax):
    return elementary_of_monomials(SymFunc._raw(basis, dict(key)), kmax, N)
