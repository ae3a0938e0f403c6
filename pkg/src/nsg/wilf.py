"""The Wilf function, its threshold mu, and the Eliahou number."""
from __future__ import annotations

from .core import NumericalSemigroup, NumericalSemigroupError, build
from .invariants import generator_split, partition_profile

__all__ = ["BadParams", "wilf", "mu", "eliahou", "w_mq"]


class BadParams(NumericalSemigroupError):
    pass


def wilf(S: NumericalSemigroup, k: int) -> int:
    """``k * delta - c``.  At ``k = e`` this is the Wilf number."""
    return k * S.delta - S.conductor


def mu(S: NumericalSemigroup) -> int:
    """Least ``k >= 0`` with ``wilf(S, k) >= 0``; 0 for N."""
    d = S.delta
    if d == 0:
        return 0
    return -(-S.conductor // d)


def eliahou(S: NumericalSemigroup) -> int:
    """``e_s * delta - q * |d_q| + nu``, with ``d_q`` the non-generators of ``[c, c+m)``."""
    e_s, _, d_q = generator_split(S)
    profile = partition_profile(S)
    return e_s * S.delta - profile.q * d_q + profile.nu


def w_mq(m: int, q: int) -> NumericalSemigroup:
    """The semigroup ``<m, qm+1, ..., qm+m-1>``."""
    if m <= 1 or q <= 0:
        raise BadParams(f"need m > 1 and q > 0, got m={m}, q={q}")
    return build([m] + [q * m + i for i in range(1, m)])
