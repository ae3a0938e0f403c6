"""Executable hypothesis/conclusion checks for the concentration results.

Every rational inequality is compared by integer cross-multiplication.
A verdict with ``hypotheses_met`` true and ``conclusion_holds`` false is a
falsification; since the statements are proved, it always means a bug.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .core import GeneratorSpec, NumericalSemigroup, TrivialSemigroup, build
from .invariants import concentration, generator_split, is_highly_dense, partition_profile
from .wilf import BadParams, eliahou, mu, wilf

__all__ = [
    "TheoremId",
    "TheoremVerdict",
    "FuzzParams",
    "check_P3_3",
    "check_P3_4",
    "check_P3_5",
    "check_P3_6",
    "check_T4_1",
    "check_T4_2",
    "check_T4_3",
    "check_C4_4",
    "check_D5_HD",
    "check_P5_1",
    "check_C5_2",
    "check_C5_3",
    "CHECKERS",
    "check_all",
    "random_semigroup",
]


class TheoremId(str, enum.Enum):
    P3_3 = "P3_3"
    P3_4 = "P3_4"
    P3_5 = "P3_5"
    P3_6 = "P3_6"
    T4_1 = "T4_1"
    T4_2 = "T4_2"
    T4_3 = "T4_3"
    C4_4 = "C4_4"
    D5_HD = "D5_HD"
    P5_1 = "P5_1"
    C5_2 = "C5_2"
    C5_3 = "C5_3"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: TheoremId
    hypotheses_met: bool
    conclusion_holds: Optional[bool]
    witness: dict = field(default_factory=dict)

    @property
    def falsified(self) -> bool:
        return self.hypotheses_met and self.conclusion_holds is False

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "hypotheses_met": self.hypotheses_met,
            "conclusion_holds": self.conclusion_holds,
            "witness": dict(self.witness),
        }


def _verdict(tid, hypotheses: bool, conclusion: Callable[[], bool], **witness) -> TheoremVerdict:
    return TheoremVerdict(
        TheoremId(tid), bool(hypotheses), bool(conclusion()) if hypotheses else None, witness
    )


class _Inv:
    """Invariants shared by the checkers, computed once per semigroup."""

    def __init__(self, S: NumericalSemigroup):
        if S.is_trivial:
            raise TrivialSemigroup("theorem checks need a nontrivial semigroup")
        self.S = S
        self.m = S.multiplicity
        self.c = S.conductor
        self.delta = S.delta
        self.e = S.embedding_dimension
        self.k = concentration(S)
        self.e_s, self.e_c, self.d_q = generator_split(S)
        profile = partition_profile(S)
        self.L, self.rho = profile.L, profile.rho
        self.mu = mu(S)
        self.E = eliahou(S)
        self.highly_dense = is_highly_dense(S)

    def W(self, k: int) -> int:
        return wilf(self.S, k)


def _inv(S) -> _Inv:
    return S if isinstance(S, _Inv) else _Inv(S)


def check_P3_3(S) -> TheoremVerdict:
    """delta >= ((L-1)m + rho)/k + 1."""
    v = _inv(S)
    rhs = Fraction((v.L - 1) * v.m + v.rho, v.k) + 1
    return _verdict(
        "P3_3", True, lambda: v.k * (v.delta - 1) >= (v.L - 1) * v.m + v.rho,
        delta=v.delta, L=v.L, m=v.m, rho=v.rho, k=v.k, bound=str(rhs),
        tight=v.k * (v.delta - 1) == (v.L - 1) * v.m + v.rho,
    )


def check_P3_4(S) -> TheoremVerdict:
    """c > 2m implies e_s >= m/k."""
    v = _inv(S)
    return _verdict(
        "P3_4", v.c > 2 * v.m, lambda: v.e_s * v.k >= v.m,
        c=v.c, m=v.m, e_s=v.e_s, k=v.k,
    )


def check_P3_5(S) -> TheoremVerdict:
    """W(2k) >= 0 and 2k >= mu.

    The argument goes through the e_s >= m/k bound, which needs c > 2m;
    without it {0, 3, ->} has W(2) = -1.  The guard is part of the
    hypotheses here.
    """
    v = _inv(S)
    return _verdict(
        "P3_5", v.c > 2 * v.m, lambda: v.W(2 * v.k) >= 0 and 2 * v.k >= v.mu,
        c=v.c, m=v.m, k=v.k, W_2k=v.W(2 * v.k), mu=v.mu,
    )


def check_P3_6(S) -> TheoremVerdict:
    """delta >= m - k implies W(k+1) >= 0 and k+1 >= mu."""
    v = _inv(S)
    return _verdict(
        "P3_6", v.delta >= v.m - v.k, lambda: v.W(v.k + 1) >= 0 and v.k + 1 >= v.mu,
        delta=v.delta, m=v.m, k=v.k, W_k1=v.W(v.k + 1), mu=v.mu,
    )


def check_T4_1(S) -> TheoremVerdict:
    """W(e) >= E >= W(e_s)."""
    v = _inv(S)
    return _verdict(
        "T4_1", True, lambda: v.W(v.e) >= v.E >= v.W(v.e_s),
        W_e=v.W(v.e), E=v.E, W_es=v.W(v.e_s), e=v.e, e_s=v.e_s,
    )


def check_T4_2(S) -> TheoremVerdict:
    """E < 0 implies W(e) < e_c * delta and mu > e_s."""
    v = _inv(S)
    return _verdict(
        "T4_2", v.E < 0, lambda: v.W(v.e) < v.e_c * v.delta and v.mu > v.e_s,
        E=v.E, W_e=v.W(v.e), e_c=v.e_c, delta=v.delta, mu=v.mu, e_s=v.e_s,
    )


def check_T4_3(S) -> TheoremVerdict:
    """c > 2m and m/k^2 > (L+1)/(L-1) imply E >= 0."""
    v = _inv(S)
    hyp = v.c > 2 * v.m and v.m * (v.L - 1) > v.k ** 2 * (v.L + 1)
    return _verdict(
        "T4_3", hyp, lambda: v.E >= 0,
        c=v.c, m=v.m, k=v.k, L=v.L, lhs=v.m * (v.L - 1), rhs=v.k ** 2 * (v.L + 1), E=v.E,
    )


def check_C4_4(S) -> TheoremVerdict:
    """E < 0 implies m/k^2 < (L+1)/(L-1), cross-multiplied."""
    v = _inv(S)
    return _verdict(
        "C4_4", v.E < 0, lambda: v.m * (v.L - 1) < v.k ** 2 * (v.L + 1),
        E=v.E, m=v.m, k=v.k, L=v.L, lhs=v.m * (v.L - 1), rhs=v.k ** 2 * (v.L + 1),
    )


def check_D5_HD(S) -> TheoremVerdict:
    """Classification by the highly dense definition.

    The conclusion re-derives what the definition is used for downstream:
    either k <= 2, or e >= 2k so that W(e) >= W(2k).
    """
    v = _inv(S)
    clause = 1 if v.k <= 2 else (2 if 2 * v.k <= v.e and v.e >= 4 else 0)
    return _verdict(
        "D5_HD", v.highly_dense,
        lambda: v.k <= 2 or (v.e >= 2 * v.k and v.W(v.e) >= v.W(2 * v.k)),
        k=v.k, e=v.e, clause=clause,
    )


def check_P5_1(S) -> TheoremVerdict:
    """Highly dense (and c > 2m, inherited from P3_5) implies W(e) >= 0."""
    v = _inv(S)
    return _verdict(
        "P5_1", v.highly_dense and v.c > 2 * v.m, lambda: v.W(v.e) >= 0,
        highly_dense=v.highly_dense, c=v.c, m=v.m, k=v.k, e=v.e, W_e=v.W(v.e),
    )


def check_C5_2(S) -> TheoremVerdict:
    """k >= 2, c > 2m, e_s >= 2k imply E >= 0."""
    v = _inv(S)
    hyp = v.k >= 2 and v.c > 2 * v.m and v.e_s >= 2 * v.k
    return _verdict(
        "C5_2", hyp, lambda: v.E >= 0,
        k=v.k, c=v.c, m=v.m, e_s=v.e_s, E=v.E,
    )


def check_C5_3(S) -> TheoremVerdict:
    """k >= 2, e_s >= k+1, delta >= m-k, c > 2m imply E >= 0."""
    v = _inv(S)
    hyp = v.k >= 2 and v.e_s >= v.k + 1 and v.delta >= v.m - v.k and v.c > 2 * v.m
    return _verdict(
        "C5_3", hyp, lambda: v.E >= 0,
        k=v.k, e_s=v.e_s, delta=v.delta, m=v.m, c=v.c, E=v.E,
    )


CHECKERS = {
    TheoremId.P3_3: check_P3_3,
    TheoremId.P3_4: check_P3_4,
    TheoremId.P3_5: check_P3_5,
    TheoremId.P3_6: check_P3_6,
    TheoremId.T4_1: check_T4_1,
    TheoremId.T4_2: check_T4_2,
    TheoremId.T4_3: check_T4_3,
    TheoremId.C4_4: check_C4_4,
    TheoremId.D5_HD: check_D5_HD,
    TheoremId.P5_1: check_P5_1,
    TheoremId.C5_2: check_C5_2,
    TheoremId.C5_3: check_C5_3,
}


def check_all(S: NumericalSemigroup) -> list[TheoremVerdict]:
    v = _Inv(S)
    return [check(v) for check in CHECKERS.values()]


@dataclass(frozen=True)
class FuzzParams:
    seed: int = 0
    max_multiplicity: int = 200
    max_generators: int = 8
    threshold_probability: float = 0.5
    count: int = 100

    def validate(self) -> None:
        if self.max_multiplicity < 2:
            raise BadParams("max_multiplicity must be at least 2")
        if self.max_generators < 2:
            raise BadParams("max_generators must be at least 2")
        if self.count < 0:
            raise BadParams("count must be nonnegative")
        if not 0 <= self.threshold_probability <= 1:
            raise BadParams("threshold_probability must lie in [0, 1]")


def random_spec(rng: random.Random, params: FuzzParams) -> GeneratorSpec:
    m = rng.randint(2, params.max_multiplicity)
    n_extra = rng.randint(1, params.max_generators - 1)
    if rng.random() < 0.25:
        # evenly spaced generators keep the concentration small
        step = rng.randint(1, max(1, math.isqrt(m)))
        gens = [m] + [m + step * i for i in range(1, n_extra + 1)]
    else:
        gens = [m] + [rng.randint(m + 1, 3 * m) for _ in range(n_extra)]
    if math.gcd(*gens) != 1:
        gens.append(next(x for x in range(m + 1, 2 * m + 1) if math.gcd(m, x) == 1))
    threshold = None
    if rng.random() < params.threshold_probability:
        threshold = rng.randint(2 * m, 15 * m)
    return GeneratorSpec(tuple(gens), threshold)


def random_semigroup(params: FuzzParams) -> Iterator[NumericalSemigroup]:
    """Deterministic stream of ``params.count`` random semigroups.

    Multiplicity is drawn from ``[2, max_multiplicity]``; the other
    generators from ``(m, 3m]``, or, one time in four, as an arithmetic
    progression above ``m`` with step at most ``sqrt(m)``.  A generator
    coprime to ``m`` is appended when needed, and with probability
    ``threshold_probability`` a threshold in ``[2m, 15m]`` is added.
    """
    params.validate()
    rng = random.Random(params.seed)
    for _ in range(params.count):
        yield build(random_spec(rng, params))
