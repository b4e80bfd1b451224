"""Exact linear algebra on sparse vectors with hashable coordinates.

Vectors are dicts from coordinate labels to integers or Fractions; they are
scaled to integers and handed to the compiled (or fallback) RREF kernel.
"""
from fractions import Fraction
from math import lcm

from . import kernels


class Indexer:
    """Assigns consecutive integer columns to coordinate labels."""

    def __init__(self):
        self.index = {}
        self.labels = []

    def __call__(self, label):
        i = self.index.get(label)
        if i is None:
            i = self.index[label] = len(self.labels)
            self.labels.append(label)
        return i

    def __len__(self):
        return len(self.labels)


def integral(vec):
    """Scale a rational sparse vector to integers (positive scale)."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for k, v in vec.items():
        if v:
            w = v * den
            out[k] = int(w) if not isinstance(w, Fraction) else w.numerator
    return out


def rank(vectors):
    idx = Indexer()
    rows = [{idx(k): v for k, v in integral(vec).items()} for vec in vectors]
    return kernels.rank(rows, len(idx)) if len(idx) else 0


def independent_columns(vectors):
    """True if the given sparse vectors are linearly independent."""
    vectors = list(vectors)
    if any(not v for v in vectors):
        return False
    return rank(vectors) == len(vectors)


def in_span(vectors, target):
    """True if ``target`` lies in the span of ``vectors``."""
    vectors = list(vectors)
    return rank(vectors + [target]) == rank(vectors)


def nullspace(rows, ncols):
    """Integer basis of the solutions of sparse ``rows`` (dicts ``col -> value``)."""
    return kernels.nullspace([integral(r) for r in rows], ncols)
