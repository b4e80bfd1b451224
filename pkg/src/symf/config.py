"""Runtime limits: the degree cap and the Schur-Weyl oracle size cap."""
import os
from contextlib import contextmanager

from .errors import DegreeCapExceeded, SizeCapExceeded

DEFAULT_DEGREE_CAP = 20
DEFAULT_ORACLE_CAP = 256

_degree_cap = None
_oracle_cap = DEFAULT_ORACLE_CAP


def degree_cap():
    if _degree_cap is not None:
        return _degree_cap
    env = os.environ.get("SYMF_DEGREE_CAP")
    if env:
        return int(env)
    return DEFAULT_DEGREE_CAP


def set_degree_cap(cap):
    """Set the process-wide degree cap; ``None`` restores env/default lookup."""
    global _degree_cap
    if cap is not None and cap < 0:
        raise ValueError("degree cap must be nonnegative")
    _degree_cap = cap


@contextmanager
def degree_cap_set(cap):
    global _degree_cap
    old = _degree_cap
    set_degree_cap(cap)
    try:
        yield
    finally:
        _degree_cap = old


def check_degree(d):
    cap = degree_cap()
    if d > cap:
        raise DegreeCapExceeded("degree %d exceeds cap %d" % (d, cap))


def oracle_cap():
    return _oracle_cap


def set_oracle_cap(cap):
    global _oracle_cap
    _oracle_cap = int(cap)


def check_oracle_size(N, n):
    if N ** n > _oracle_cap:
        raise SizeCapExceeded(
            "N^n = %d^%d = %d exceeds oracle cap %d" % (N, n, N ** n, _oracle_cap))
