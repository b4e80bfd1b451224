"""Brute-force exact Schur-Weyl checks on (k^N)^{tensor n}.

Everything here is finite linear algebra over the rationals. The commutant
of the monoid of all N x N matrices acting diagonally is cut out by finitely
many polarized generators: in characteristic zero, the span of
``L^{tensor n}`` over all ``L`` equals the span of the symmetrized products
of ``n`` matrix units.

Basis words are tuples over ``1..N`` ordered lexicographically; a word's
flat index is its base-N value with digits ``w_k - 1``.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from . import kernels
from .config import check_oracle_size
from .errors import NotAPermutation, SymfError
from .linalg import integral, nullspace, rank
from .partition import Partition, hook_dimension, partitions_of
from .truncation import _distinct_permutations


def _check_sizes(N, n):
    if N < 1 or n < 0:
        raise SymfError("need N >= 1 and n >= 0")
    check_oracle_size(N, n)


def words(N, n):
    return list(product(range(1, N + 1), repeat=n))


def word_index(word, N):
    i = 0
    for w in word:
        i = i * N + (w - 1)
    return i


def index_word(i, N, n):
    out = [0] * n
    for k in range(n - 1, -1, -1):
        i, r = divmod(i, N)
        out[k] = r + 1
    return tuple(out)


class TensorOperator:
    """A sparse linear endomorphism of (k^N)^{tensor n}.

    ``matrix`` maps flat ``(row, col)`` index pairs to nonzero rationals;
    ``entries`` gives the same data keyed by basis words.
    """

    __slots__ = ("N", "n", "matrix")

    def __init__(self, N, n, matrix=None):
        self.N = N
        self.n = n
        self.matrix = {k: v for k, v in (matrix or {}).items() if v}

    @classmethod
    def from_entries(cls, N, n, entries):
        return cls(N, n, {(word_index(u, N), word_index(v, N)): Fraction(c)
                          for (u, v), c in entries.items()})

    @classmethod
    def identity(cls, N, n):
        return cls(N, n, {(i, i): 1 for i in range(N ** n)})

    @property
    def dim(self):
        return self.N ** self.n

    @property
    def entries(self):
        N, n = self.N, self.n
        return {(index_word(a, N, n), index_word(b, N, n)): Fraction(v)
                for (a, b), v in self.matrix.items()}

    def _like(self, other):
        if (self.N, self.n) != (other.N, other.n):
            raise SymfError("operators act on different tensor powers")

    def __add__(self, other):
        self._like(other)
        out = dict(self.matrix)
        for k, v in other.matrix.items():
            out[k] = out.get(k, 0) + v
        return TensorOperator(self.N, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TensorOperator(self.N, self.n, {k: c * v for k, v in self.matrix.items()})

    def __matmul__(self, other):
        self._like(other)
        rows = {}
        for (a, b), v in other.matrix.items():
            rows.setdefault(a, []).append((b, v))
        out = {}
        for (a, m), v in self.matrix.items():
            for b, w in rows.get(m, ()):
                out[(a, b)] = out.get((a, b), 0) + v * w
        return TensorOperator(self.N, self.n, out)

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.N, self.n) == (other.N, other.n) and self.matrix == other.matrix

    __hash__ = None

    def is_zero(self):
        return not self.matrix

    def commutes_with(self, other):
        return (self @ other) == (other @ self)

    def vector(self):
        """Flat coordinates ``row * dim + col``."""
        D = self.dim
        return {a * D + b: v for (a, b), v in self.matrix.items()}

    def to_dense(self):
        D = self.dim
        out = [[Fraction(0)] * D for _ in range(D)]
        for (a, b), v in self.matrix.items():
            out[a][b] = Fraction(v)
        return out

    def to_json(self):
        items = sorted(self.matrix.items())
        N, n = self.N, self.n
        return {
            "N": N,
            "n": n,
            "entries": [
                {"row": list(index_word(a, N, n)), "col": list(index_word(b, N, n)),
                 "num": str(Fraction(v).numerator), "den": str(Fraction(v).denominator)}
                for (a, b), v in items
            ],
        }

    def __repr__(self):
        return "TensorOperator(N=%d, n=%d, nnz=%d)" % (self.N, self.n, len(self.matrix))


# -- generators --------------------------------------------------------------------

def _polarized(N, n):
    units = [(i, j) for i in range(N) for j in range(N)]
    out = []
    for multiset in combinations_with_replacement(units, n):
        weight = 1
        for u in set(multiset):
            weight *= factorial(multiset.count(u))
        matrix = {}
        for arrangement in _distinct_permutations(multiset):
            a = b = 0
            for i, j in arrangement:
                a = a * N + i
                b = b * N + j
            matrix[(a, b)] = weight
        out.append((multiset, TensorOperator(N, n, matrix)))
    return out


def polarized_generators(N, n):
    """One symmetrized product of matrix units per multiset of n units.

    For the multiset {A_1..A_n} the operator is the sum over all orderings
    of A_s(1) x ... x A_s(n); repeated units make some orderings coincide,
    which shows up as the product of multiplicity factorials.
    """
    _check_sizes(N, n)
    return [op for _, op in _polarized(N, n)]


def _check_permutation(sigma, n):
    sigma = tuple(int(s) for s in sigma)
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise NotAPermutation("%s is not a permutation of 1..%d" % (list(sigma), n))
    return sigma


def permutation_operator(N, n, sigma):
    """The operator sending e_w to e_{w o sigma^-1}; sigma -> operator is a homomorphism."""
    _check_sizes(N, n)
    sigma = _check_permutation(sigma, n)
    inverse = [0] * n
    for i, s in enumerate(sigma):
        inverse[s - 1] = i
    matrix = {}
    for w in product(range(N), repeat=n):
        image = 0
        for k in range(n):
            image = image * N + w[inverse[k]]
        src = 0
        for x in w:
            src = src * N + x
        matrix[(image, src)] = 1
    return TensorOperator(N, n, matrix)


def _all_permutation_operators(N, n):
    return [permutation_operator(N, n, [s + 1 for s in p]) for p in permutations(range(n))]


# -- commutant by incremental elimination -----------------------------------------

def _row_col_lists(op):
    rows = {}
    cols = {}
    for (a, b), g in op.matrix.items():
        rows.setdefault(a, []).append((b, g))
        cols.setdefault(b, []).append((a, g))
    return rows, cols


def _full_space_kernel(op, D):
    """Kernel of psi -> [psi, G] over all D x D matrices psi."""
    rows, cols = _row_col_lists(op)
    constraints = []
    for a in range(D):
        left = rows.get(a, ())  # G[a, w]
        for b in range(D):
            row = {}
            for v, g in cols.get(b, ()):  # G[v, b]
                k = a * D + v
                row[k] = row.get(k, 0) + g
            for w, g in left:
                k = w * D + b
                row[k] = row.get(k, 0) - g
            row = {k: v for k, v in row.items() if v}
            if row:
                constraints.append(row)
    return nullspace(constraints, D * D)


def _restrict(basis, op, D):
    """The part of span(basis) commuting with ``op``; None if all of it does."""
    items = [(a, b, g) for (a, b), g in op.matrix.items()]
    system = kernels.commutator_system(basis, items, D)
    if not system:
        return None
    combos = nullspace(list(system.values()), len(basis))
    out = []
    for z in combos:
        vec = {}
        for j, c in z.items():
            for k, v in basis[j].items():
                vec[k] = vec.get(k, 0) + c * v
        out.append(integral({k: v for k, v in vec.items() if v}))
    return out


def _canonical(basis, ncols):
    return [row for _, row in kernels.rref([integral(v) for v in basis], ncols)]


def kernel_of_commutators(ops, D, stop=None):
    """Basis of {psi : [psi, G] = 0 for every G in ``ops``}, as flat integer vectors.

    ``stop(basis)`` may return True once the answer is known; the remaining
    operators are then only checked against the basis, and elimination
    resumes if any of them fails.
    """
    basis = None
    converged = False
    for op in ops:
        if basis is None:
            basis = _full_space_kernel(op, D)
        else:
            reduced = _restrict(basis, op, D)
            if reduced is None:
                continue
            if converged:
                converged = False
            basis = reduced
        if stop is not None and not converged and stop(basis):
            converged = True
    if basis is None:
        basis = [{k: 1} for k in range(D * D)]
    return _canonical(basis, D * D)


def _vector_to_operator(vec, N, n):
    D = N ** n
    return TensorOperator(N, n, {divmod(k, D): v for k, v in vec.items()})


def expected_commutant_dimension(N, n):
    """Sum of (f^lam)^2 over partitions of n with at most N rows."""
    return sum(hook_dimension(lam) ** 2 for lam in partitions_of(n) if len(lam) <= N)


@dataclass
class CommutantReport:
    N: int
    n: int
    dimension: int
    basis: list = field(repr=False)
    permutation_image_dimension: int
    is_isomorphism: bool
    permutations_contained: bool = True

    def to_json(self, verbose=False):
        out = {
            "N": self.N,
            "n": self.n,
            "dimension": self.dimension,
            "is_isomorphism": self.is_isomorphism,
            "permutation_image_dimension": self.permutation_image_dimension,
        }
        if verbose:
            out["basis"] = [op.to_json() for op in self.basis]
        return out


def _generator_order(item):
    multiset, _ = item
    return sum(1 for i, j in multiset if i != j)


def _report(N, n, vectors):
    perms = [p.vector() for p in _all_permutation_operators(N, n)]
    dim = len(vectors)
    image = rank(perms)
    contained = rank(vectors + perms) == dim
    return CommutantReport(
        N=N, n=n, dimension=dim,
        basis=[_vector_to_operator(v, N, n) for v in vectors],
        permutation_image_dimension=image,
        is_isomorphism=(dim == factorial(n) and image == factorial(n)),
        permutations_contained=contained,
    )


def commutant(N, n):
    """The commutant of all L^{tensor n}, by exact elimination against the polarized generators."""
    _check_sizes(N, n)
    D = N ** n
    gens = [op for _, op in sorted(_polarized(N, n), key=_generator_order)]
    target = factorial(n)

    def stop(basis):
        if N < n or len(basis) != target:
            return False
        perms = [p.vector() for p in _all_permutation_operators(N, n)]
        return rank(basis + perms) == target

    return _report(N, n, kernel_of_commutators(gens, D, stop))


def commutant_by_sampling(N, n, samples=30, seed=0, bound=5):
    """The commutant of L^{tensor n} for ``samples`` random integer matrices L.

    Finitely many samples can only enlarge the kernel, so agreement with
    :func:`commutant` certifies that the polarized generators suffice.
    """
    _check_sizes(N, n)
    rng = random.Random(seed)
    D = N ** n
    ops = []
    for _ in range(samples):
        L = [[rng.randint(-bound, bound) for _ in range(N)] for _ in range(N)]
        matrix = {}
        for u in product(range(N), repeat=n):
            for v in product(range(N), repeat=n):
                c = 1
                for i, j in zip(u, v):
                    c *= L[i][j]
                    if not c:
                        break
                if c:
                    matrix[(word_index([x + 1 for x in u], N), word_index([x + 1 for x in v], N))] = c
        ops.append(TensorOperator(N, n, matrix))
    return _report(N, n, kernel_of_commutators(ops, D))


# -- equivariant maps between Young-symmetrizer images ------------------------------

def _young_image(N, lam):
    """RREF basis (pivot, vector) of the image of the Young symmetrizer for ``lam``."""
    n = lam.degree
    D = N ** n
    if n == 0:
        return [(0, {0: 1})]
    filling = []
    start = 0
    for r in lam:
        filling.append(list(range(start, start + r)))
        start += r
    columns = [[row[c] for row in filling if c < len(row)] for c in range(lam[0])]

    def group(blocks):
        # all permutations of 0..n-1 preserving each block, with signs
        out = [(list(range(n)), 1)]
        for block in blocks:
            nxt = []
            for base, sign in out:
                for p in permutations(block):
                    perm = list(base)
                    for src, dst in zip(block, p):
                        perm[src] = dst
                    nxt.append((perm, sign * _sign(p, block)))
            out = nxt
        return out

    rows_group = group(filling)
    cols_group = group(columns)

    def act(perm, w):
        # factor k of w moves to position perm[k]
        out = [0] * n
        for k in range(n):
            out[perm[k]] = w[k]
        return tuple(out)

    vectors = []
    for w in product(range(N), repeat=n):
        anti = {}
        for perm, sign in cols_group:
            x = act(perm, w)
            anti[x] = anti.get(x, 0) + sign
        image = {}
        for x, c in anti.items():
            if not c:
                continue
            for perm, _ in rows_group:
                y = act(perm, x)
                k = 0
                for d in y:
                    k = k * N + d
                image[k] = image.get(k, 0) + c
        image = {k: v for k, v in image.items() if v}
        if image:
            vectors.append(image)
    return kernels.rref(vectors, D) if vectors else []


def _sign(p, block):
    pos = {b: i for i, b in enumerate(block)}
    seq = [pos[x] for x in p]
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def _restricted_action(basis, op):
    """Matrix of ``op`` on span(basis), in the coordinates of the RREF basis."""
    rows, _ = _row_col_lists(op)
    r = len(basis)
    out = [[Fraction(0)] * r for _ in range(r)]
    for j, (_, vec) in enumerate(basis):
        image = {}
        for (a, b), g in op.matrix.items():
            x = vec.get(b)
            if x:
                image[a] = image.get(a, 0) + g * x
        for i, (p, bvec) in enumerate(basis):
            c = image.get(p, 0)
            if c:
                out[i][j] = Fraction(c, bvec[p])
    return out


def cross_degree_hom_dim(N, lam, mu):
    """Dimension of the maps between Young-symmetrizer images commuting with every L.

    The equivariance condition f L^{tensor a} = L^{tensor b} f is polynomial
    in the entries of L, homogeneous of degree a on the left and b on the
    right. When a != b each side must vanish separately; otherwise both
    sides are tested against the polarized generators of degree a.
    """
    lam = Partition(lam)
    mu = Partition(mu)
    a, b = lam.degree, mu.degree
    _check_sizes(N, a)
    _check_sizes(N, b)
    src = _young_image(N, lam)
    dst = _young_image(N, mu)
    rs, rd = len(src), len(dst)
    if not rs or not rd:
        return 0
    # unknown f[i][j] (dst row i, src column j) sits at column i * rs + j
    constraints = []

    def right_action(R):
        # (f R)[i][j] = sum_k f[i][k] R[k][j]
        return [{i * rs + k: R[k][j] for k in range(rs) if R[k][j]}
                for i in range(rd) for j in range(rs)]

    def left_action(R):
        # (R f)[i][j] = sum_k R[i][k] f[k][j]
        return [{k * rs + j: R[i][k] for k in range(rd) if R[i][k]}
                for i in range(rd) for j in range(rs)]

    if a == b:
        for _, op in _polarized(N, a):
            Rs = _restricted_action(src, op)
            Rd = _restricted_action(dst, op)
            for x, y in zip(right_action(Rs), left_action(Rd)):
                row = dict(x)
                for k, v in y.items():
                    row[k] = row.get(k, 0) - v
                constraints.append({k: v for k, v in row.items() if v})
    else:
        for _, op in _polarized(N, a):
            constraints.extend(right_action(_restricted_action(src, op)))
        for _, op in _polarized(N, b):
            constraints.extend(left_action(_restricted_action(dst, op)))
    constraints = [c for c in constraints if c]
    return len(nullspace(constraints, rs * rd))


def young_image_dimension(N, lam):
    """Dimension of the image of the Young symmetrizer for ``lam`` on (k^N)^{tensor |lam|}."""
    lam = Partition(lam)
    _check_sizes(N, lam.degree)
    return len(_young_image(N, lam))


__all__ = [
    "TensorOperator", "CommutantReport", "polarized_generators", "permutation_operator",
    "commutant", "commutant_by_sampling", "cross_degree_hom_dim", "expected_commutant_dimension",
    "young_image_dimension", "kernel_of_commutators", "words",
]
