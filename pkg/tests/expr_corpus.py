"""Seeded random expression trees shared by the parser tests and the acceptance suite."""
import random

from symf.expr import BinOp, Call, Gen, Int, Omega, Plethysm, Pow
from symf.partition import Partition

BASES = "ehpms"


def random_partition(rng, max_degree):
    parts = []
    left = rng.randint(1, max_degree)
    while left:
        k = rng.randint(1, left)
        parts.append(k)
        left -= k
    return Partition(sorted(parts, reverse=True))


def random_tree(rng, depth, max_degree=3):
    if depth <= 1 or rng.random() < 0.25:
        if rng.random() < 0.2:
            return Int(rng.randint(0, 12))
        return Gen(rng.choice(BASES), random_partition(rng, max_degree))
    kind = rng.choice(["+", "-", "*", "^", "omega", "plethysm", "adams", "lambda", "sigma"])
    sub = lambda: random_tree(rng, depth - 1, max_degree)  # noqa: E731
    if kind in "+-*":
        return BinOp(kind, sub(), sub())
    if kind == "^":
        return Pow(sub(), rng.randint(0, 3))
    if kind == "omega":
        return Omega(sub())
    if kind == "plethysm":
        return Plethysm(sub(), sub())
    return Call(kind, rng.randint(1 if kind == "adams" else 0, 3), sub())


def corpus(size=1000, depth=5, seed=2024):
    rng = random.Random(seed)
    return [random_tree(rng, depth) for _ in range(size)]


def degree_bound(node):
    """Upper bound on the degree of the value of ``node``."""
    if isinstance(node, Int):
        return 0
    if isinstance(node, Gen):
        return node.partition.degree
    if isinstance(node, BinOp):
        a, b = degree_bound(node.left), degree_bound(node.right)
        return a + b if node.op == "*" else max(a, b)
    if isinstance(node, Pow):
        return degree_bound(node.base) * node.exponent
    if isinstance(node, Omega):
        return degree_bound(node.arg)
    if isinstance(node, Plethysm):
        return degree_bound(node.outer) * degree_bound(node.inner)
    return node.k * degree_bound(node.arg)
